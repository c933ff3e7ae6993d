"""Exact integer matrix utilities and the shared text format for square matrices.

Matrices are plain tuples of tuples of Python ints; all arithmetic is
arbitrary precision.  The text format is: first line the size r, then r
lines of r space-separated integers.  Lines starting with '#' are comments.
"""

from __future__ import annotations

from dataclasses import dataclass

IntMatrix = tuple[tuple[int, ...], ...]


def as_matrix(rows) -> IntMatrix:
    mat = tuple(tuple(int(x) for x in row) for row in rows)
    if any(len(row) != len(mat) for row in mat):
        raise ValueError("matrix must be square")
    return mat


def transpose(m: IntMatrix) -> IntMatrix:
    return tuple(zip(*m))


def is_symmetric(m: IntMatrix) -> bool:
    n = len(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i))


def add(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def symmetrize(m: IntMatrix) -> IntMatrix:
    """m + m^T."""
    return add(m, transpose(m))


def antisymmetrize(m: IntMatrix) -> IntMatrix:
    n = len(m)
    return tuple(tuple(m[i][j] - m[j][i] for j in range(n)) for i in range(n))


def mat_vec(m: IntMatrix, v) -> tuple[int, ...]:
    return tuple(sum(mij * vj for mij, vj in zip(row, v)) for row in m)


def bilinear(a, m: IntMatrix, b) -> int:
    """a^T m b."""
    return sum(ai * x for ai, x in zip(a, mat_vec(m, b)))


def dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def det(m: IntMatrix) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def leading_principal_minors(m: IntMatrix) -> list[int]:
    n = len(m)
    return [det(tuple(row[: k + 1] for row in m[: k + 1])) for k in range(n)]


@dataclass(frozen=True)
class GramLattice:
    """Symmetric integer Gram matrix of a lattice basis."""

    gram: IntMatrix

    def __post_init__(self):
        object.__setattr__(self, "gram", as_matrix(self.gram))
        if not is_symmetric(self.gram):
            raise ValueError("Gram matrix must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def determinant(self) -> int:
        return det(self.gram)


def format_matrix_text(m: IntMatrix, comment: str | None = None) -> str:
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    lines.append(str(len(m)))
    for row in m:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def parse_matrix_text(text: str) -> IntMatrix:
    rows = []
    size = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if size is None:
            try:
                size = int(line)
            except ValueError:
                raise ValueError(f"line {lineno}: expected matrix size, got {line!r}")
            if size <= 0:
                raise ValueError(f"line {lineno}: matrix size must be positive")
            continue
        try:
            row = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers, got {line!r}")
        if len(row) != size:
            raise ValueError(f"line {lineno}: expected {size} entries, got {len(row)}")
        rows.append(row)
    if size is None:
        raise ValueError("empty matrix file")
    if len(rows) != size:
        raise ValueError(f"expected {size} rows, got {len(rows)}")
    return tuple(rows)
