"""Exact embedding of positive-definite integral lattices into Z^M.

The decision procedure is a complete backtracking search: basis vectors are
assigned integer M-vectors in order, constrained by every pairwise dot
product against the vectors already placed.  Ambient coordinate
permutations and sign flips are quotiented by first-use canonicalization:
coordinates enter the search in ascending index order, and the block of
coordinates first touched by a given vector carries positive, non-increasing
values.  Every embedding is equivalent to a canonical one under the ambient
symmetries, so absence results are exhaustive.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import isqrt

from .matrices import GramLattice, dot, leading_principal_minors


class SearchBudgetExceeded(Exception):
    """Raised when an embedding search hits its node or time budget."""


@dataclass(frozen=True)
class Embedding:
    vectors: tuple[tuple[int, ...], ...]
    ambient_dim: int

    def __post_init__(self):
        vecs = tuple(tuple(int(x) for x in v) for v in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        if any(len(v) != self.ambient_dim for v in vecs):
            raise ValueError("all vectors must have length ambient_dim")


def first_nonpositive_minor(g: GramLattice) -> tuple[int, int] | None:
    """(1-based order, value) of the first leading principal minor <= 0."""
    for k, minor in enumerate(leading_principal_minors(g.gram), 1):
        if minor <= 0:
            return k, minor
    return None


def is_positive_definite(g: GramLattice) -> bool:
    return first_nonpositive_minor(g) is None


def _square_partitions(n: int, max_part: int, max_len: int):
    """Partitions of n into non-increasing positive squares, as part values."""
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    p = min(max_part, isqrt(n))
    while p >= 1:
        for rest in _square_partitions(n - p * p, p, max_len - 1):
            yield (p,) + rest
        p -= 1


class _EmbedSearch:
    def __init__(self, gram, ambient_dim, max_nodes=None, deadline=None):
        self.g = gram
        self.rank = len(gram)
        self.M = ambient_dim
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.nodes = 0
        self.assigned: list[list[int]] = []

    def _candidates(self, i: int, used: int):
        """All canonical vectors for basis index i given the current partial
        assignment: a part over the `used` live coordinates satisfying every
        dot constraint, plus leftover norm placed on fresh coordinates."""
        d = self.g[i][i]
        max_entry = isqrt(d)
        # suffix norms of each assigned vector, for Cauchy-Schwarz pruning
        suffix = [[0] * (used + 1) for _ in range(i)]
        for j in range(i):
            vj = self.assigned[j]
            acc = 0
            for c in range(used - 1, -1, -1):
                acc += vj[c] * vj[c]
                suffix[j][c] = acc
        out = []
        x = [0] * used

        def rec(c, norm_left, needs):
            if c == used:
                if any(needs):
                    return
                for part in _square_partitions(norm_left, max_entry, self.M - used):
                    out.append((tuple(x), part))
                return
            for val in range(-max_entry, max_entry + 1):
                sq = val * val
                if sq > norm_left:
                    continue
                nleft = norm_left - sq
                nxt = []
                feasible = True
                for j in range(i):
                    r = needs[j] - val * self.assigned[j][c]
                    if r * r > nleft * suffix[j][c + 1]:
                        feasible = False
                        break
                    nxt.append(r)
                if feasible:
                    x[c] = val
                    rec(c + 1, nleft, nxt)
                    x[c] = 0

        rec(0, d, [self.g[i][j] for j in range(i)])
        return out

    def run(self):
        return self._search(0, 0)

    def _search(self, i: int, used: int):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise SearchBudgetExceeded(f"node budget exceeded at {self.nodes}")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SearchBudgetExceeded("time budget exceeded")
        if i == self.rank:
            return tuple(
                tuple(v) + (0,) * (self.M - len(v)) for v in self.assigned
            )
        for head, fresh in self._candidates(i, used):
            vec = list(head) + list(fresh) + [0] * (self.M - used - len(fresh))
            self.assigned.append(vec)
            found = self._search(i + 1, used + len(fresh))
            self.assigned.pop()
            if found is not None:
                return found
        return None


def find_embedding(
    g: GramLattice,
    ambient_dim: int,
    max_nodes: int | None = None,
    deadline: float | None = None,
) -> Embedding | None:
    """Complete search for an isometric embedding of g into Z^ambient_dim.

    Returns a witness iff one exists.  Raises SearchBudgetExceeded when the
    optional node or wall-clock budget runs out before the search finishes.
    """
    if ambient_dim <= 0:
        raise ValueError("ambient dimension must be positive")
    bad = first_nonpositive_minor(g)
    if bad is not None:
        raise ValueError(
            f"Gram matrix is not positive definite: leading principal minor "
            f"{bad[0]} is {bad[1]}"
        )
    if ambient_dim < g.rank:
        return None
    search = _EmbedSearch(g.gram, ambient_dim, max_nodes=max_nodes, deadline=deadline)
    vectors = search.run()
    if vectors is None:
        return None
    return Embedding(vectors, ambient_dim)


def min_embedding_dim(
    g: GramLattice,
    cap: int | None = None,
    max_nodes: int | None = None,
    deadline: float | None = None,
) -> int | None:
    """Smallest M <= cap admitting an embedding, or None.  Default cap is
    rank + 6 (comfortably above the answers seen in practice)."""
    if cap is None:
        cap = g.rank + 6
    if cap < g.rank:
        raise ValueError("cap must be at least the rank")
    for dim in range(g.rank, cap + 1):
        if find_embedding(g, dim, max_nodes=max_nodes, deadline=deadline) is not None:
            return dim
    return None


def verify_embedding(g: GramLattice, e: Embedding) -> bool:
    """True iff the embedding's pairwise dot products match the Gram matrix."""
    if len(e.vectors) != g.rank:
        raise ValueError("embedding rank does not match Gram matrix")
    vs = e.vectors
    return all(
        dot(vs[i], vs[j]) == g.gram[i][j]
        for i in range(g.rank)
        for j in range(i + 1)
    )


def format_embedding(e: Embedding) -> str:
    return "\n".join(" ".join(str(x) for x in v) for v in e.vectors) + "\n"
