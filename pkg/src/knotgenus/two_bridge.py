"""The K(m,n) family of 2-bridge knots and its associated exact data.

For m, n >= 0 the knot K(m,n) is the 2-bridge knot of the all-positive
continued fraction [2m+3, 1, 2n+4, 1, 1, 2], with defining fraction
(20mn + 56m + 40n + 107) / (10n + 28).  This module builds the continued
fraction, the defining fraction, the 4x4 Seifert matrix of its genus-2
Seifert surface, the positive-definite Goeritz lattice Q(m,n) of rank
2m+2n+8, and the linear plumbing weight sequence realizing it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_arith import Fraction
from .matrices import GramLattice, IntMatrix, antisymmetrize, as_matrix, det


@dataclass(frozen=True)
class KnotParams:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("m must be >= 0")
        if self.n < 0:
            raise ValueError("n must be >= 0")


def continued_fraction(k: KnotParams) -> list[int]:
    """All-positive continued fraction expansion defining K(m,n)."""
    return [2 * k.m + 3, 1, 2 * k.n + 4, 1, 1, 2]


def cf_to_fraction(coeffs) -> Fraction:
    """Evaluate an all-positive continued fraction a0 + 1/(a1 + 1/(...))."""
    coeffs = list(coeffs)
    if not coeffs:
        raise ValueError("continued fraction must be nonempty")
    if any(a < 1 for a in coeffs):
        raise ValueError("continued fraction coefficients must be positive")
    value = Fraction(coeffs[-1])
    for a in reversed(coeffs[:-1]):
        value = a + 1 / value
    return value


def fraction_to_cf(f: Fraction) -> list[int]:
    """All-positive expansion of p/q with p > q >= 1, final coefficient >= 2.

    Inverse of cf_to_fraction on canonical expansions.
    """
    p, q = f.numerator, f.denominator
    if p <= q:
        raise ValueError("fraction must have numerator > denominator >= 1")
    coeffs = []
    while q:
        coeffs.append(p // q)
        p, q = q, p % q
    # Euclidean expansion of p/q with p > q ends with a coefficient >= 2,
    # except for integers, where the single coefficient stands alone.
    if len(coeffs) > 1 and coeffs[-1] == 1:
        coeffs.pop()
        coeffs[-1] += 1
    return coeffs


def knot_fraction(k: KnotParams) -> Fraction:
    """Closed form (20mn + 56m + 40n + 107) / (10n + 28), reduced."""
    m, n = k.m, k.n
    return Fraction(20 * m * n + 56 * m + 40 * n + 107, 10 * n + 28)


def seifert_matrix(k: KnotParams) -> IntMatrix:
    """Seifert matrix of the genus-2 surface of K(m,n) in the standard basis."""
    m, n = k.m, k.n
    mat = as_matrix(
        [
            [-m - 2, 1, 0, 0],
            [0, -n - 3, 1, 0],
            [0, 0, -1, 0],
            [0, 0, -1, 1],
        ]
    )
    assert det(antisymmetrize(mat)) == 1
    return mat


def qmn_gram(k: KnotParams) -> GramLattice:
    """Goeritz lattice Q(m,n): tridiagonal of rank 2m+2n+8.

    Diagonal 3 at positions 2m+3, 2m+2n+7 and 2m+2n+8 (1-based), 2
    elsewhere; -1 on the first off-diagonals.
    """
    m, n = k.m, k.n
    r = 2 * m + 2 * n + 8
    threes = {2 * m + 3, 2 * m + 2 * n + 7, 2 * m + 2 * n + 8}
    rows = []
    for i in range(1, r + 1):
        row = [0] * r
        row[i - 1] = 3 if i in threes else 2
        if i > 1:
            row[i - 2] = -1
        if i < r:
            row[i] = -1
        rows.append(row)
    return GramLattice(rows)


def plumbing_weights(k: KnotParams) -> tuple[int, ...]:
    """Vertex weights of the linear plumbing realizing Q(m,n).

    Chain of 2m+2 vertices of weight 2, one of weight 3, 2n+3 of weight 2,
    then two of weight 3.
    """
    m, n = k.m, k.n
    return tuple([2] * (2 * m + 2) + [3] + [2] * (2 * n + 3) + [3, 3])


def path_gram(weights) -> GramLattice:
    """Gram matrix of a path graph with the given vertex weights."""
    weights = list(weights)
    r = len(weights)
    rows = []
    for i in range(r):
        row = [0] * r
        row[i] = weights[i]
        if i > 0:
            row[i - 1] = -1
        if i < r - 1:
            row[i + 1] = -1
        rows.append(row)
    return GramLattice(rows)


def crossing_count(k: KnotParams) -> int:
    """Crossing number of the standard alternating diagram: sum of the CF
    coefficients, 2m+2n+12."""
    return sum(continued_fraction(k))


def positive_crossings(k: KnotParams) -> int:
    """Positive crossings of the standard diagram: 2m+2n+10.

    Inferred, not read off the diagram: the Goeritz signature formula
    sigma = rank - n_+ with sigma = -2 and rank = 2m+2n+8 forces this value.
    Reports should flag it as derived.
    """
    return 2 * k.m + 2 * k.n + 10
