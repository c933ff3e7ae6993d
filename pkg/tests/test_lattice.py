import random
from itertools import product
from math import isqrt

import pytest

from knotgenus.lattice import (
    Embedding,
    SearchBudgetExceeded,
    find_embedding,
    first_nonpositive_minor,
    format_embedding,
    is_positive_definite,
    min_embedding_dim,
    verify_embedding,
)
from knotgenus.matrices import GramLattice, dot
from knotgenus.two_bridge import KnotParams, qmn_gram


def a_chain(n):
    return GramLattice(
        [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]
    )


def vectors_of_norm(d, dim):
    maxe = isqrt(d)
    return [
        v
        for v in product(range(-maxe, maxe + 1), repeat=dim)
        if sum(x * x for x in v) == d
    ]


def naive_find_embedding(g: GramLattice, dim):
    """Unpruned reference search over all norm-correct vectors."""
    r = g.rank
    cands = [vectors_of_norm(g.gram[i][i], dim) for i in range(r)]

    def rec(i, chosen):
        if i == r:
            return list(chosen)
        for v in cands[i]:
            if all(dot(v, chosen[j]) == g.gram[i][j] for j in range(i)):
                chosen.append(v)
                out = rec(i + 1, chosen)
                chosen.pop()
                if out:
                    return out
        return None

    out = rec(0, [])
    return Embedding(out, dim) if out else None


def test_is_positive_definite():
    assert is_positive_definite(GramLattice([[1, 0], [0, 1]]))
    assert is_positive_definite(qmn_gram(KnotParams(0, 0)))
    assert not is_positive_definite(GramLattice([[2, 3], [3, 2]]))
    assert first_nonpositive_minor(GramLattice([[2, 3], [3, 2]])) == (2, -5)


def test_a2_embeds_in_z3():
    g = a_chain(2)
    assert find_embedding(g, 2) is None
    e = find_embedding(g, 3)
    assert e is not None
    assert verify_embedding(g, e)


def test_find_embedding_validates_input():
    with pytest.raises(ValueError, match="positive definite"):
        find_embedding(GramLattice([[2, 3], [3, 2]]), 4)
    with pytest.raises(ValueError):
        find_embedding(a_chain(2), 0)


def test_q00_claim_dims():
    g = qmn_gram(KnotParams(0, 0))
    assert find_embedding(g, 10) is None
    e = find_embedding(g, 11)
    assert e is not None
    assert verify_embedding(g, e)


def test_verify_embedding():
    g = a_chain(2)
    assert verify_embedding(g, Embedding([(1, -1, 0), (0, 1, -1)], 3))
    assert not verify_embedding(GramLattice([[2]]), Embedding([(1, 0)], 2))
    with pytest.raises(ValueError):
        verify_embedding(g, Embedding([(1, -1, 0)], 3))


def test_min_embedding_dim_norm3():
    assert min_embedding_dim(GramLattice([[3]]), cap=5) == 3


def test_min_embedding_dim_a_chains():
    # n = 3 is the rank-3 chain isomorphic to the even sublattice of Z^3,
    # which embeds at dimension 3 (e1-e2, e2-e3, -e1-e2); all other n <= 6
    # need n+1.  Verified against the unpruned enumerator below.
    expected = {1: 2, 2: 3, 3: 3, 4: 5, 5: 6, 6: 7}
    for n, want in expected.items():
        assert min_embedding_dim(a_chain(n), cap=n + 3) == want


def test_a3_exception_confirmed_by_naive_search():
    g = a_chain(3)
    e = naive_find_embedding(g, 3)
    assert e is not None
    assert verify_embedding(g, e)


def test_min_embedding_dim_desk_scale():
    for (m, n), extra in [
        ((0, 0), 3),
        ((0, 1), 3),
        ((1, 0), 4),
    ]:
        g = qmn_gram(KnotParams(m, n))
        assert min_embedding_dim(g, cap=g.rank + 6) == g.rank + extra


def test_monotone_in_ambient_dim():
    rng = random.Random(47)
    for _ in range(30):
        r = rng.randint(1, 3)
        g = _random_pd_gram(rng, r)
        if g is None:
            continue
        for dim in range(r, r + 3):
            if find_embedding(g, dim) is not None:
                assert find_embedding(g, dim + 1) is not None


def _random_pd_gram(rng, r):
    rows = [[0] * r for _ in range(r)]
    for i in range(r):
        rows[i][i] = rng.randint(1, 3)
        for j in range(i):
            rows[i][j] = rows[j][i] = rng.randint(-2, 3)
    g = GramLattice(rows)
    return g if is_positive_definite(g) else None


def test_exhaustiveness_against_naive_enumeration():
    rng = random.Random(53)
    checked = 0
    while checked < 150:
        r = rng.randint(1, 3)
        g = _random_pd_gram(rng, r)
        if g is None:
            continue
        for dim in range(1, 6):
            fast = find_embedding(g, dim)
            slow = naive_find_embedding(g, dim)
            assert (fast is None) == (slow is None), (g.gram, dim)
            if fast is not None:
                assert verify_embedding(g, fast)
            checked += 1


def test_returned_witnesses_always_verify():
    for m in range(2):
        for n in range(2):
            g = qmn_gram(KnotParams(m, n))
            dim = g.rank + (3 if m == 0 else 4)
            e = find_embedding(g, dim)
            assert e is not None and verify_embedding(g, e)


def test_budget_raises():
    g = qmn_gram(KnotParams(1, 1))
    with pytest.raises(SearchBudgetExceeded):
        find_embedding(g, g.rank + 4, max_nodes=3)


def test_format_embedding():
    e = Embedding([(1, -1, 0), (0, 1, -1)], 3)
    assert format_embedding(e) == "1 -1 0\n0 1 -1\n"
