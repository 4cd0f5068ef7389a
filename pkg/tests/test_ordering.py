"""Weights, the reverse-lexicographic and principal orders, enumeration."""

import random

import pytest

from ramond import IndexPair, ZERO_PAIR, cmp_principal, cmp_revlex, pairs_of_weight


def eps(n):
    return (n,)


def test_weight_examples():
    assert IndexPair(eps(1), ()).weight == 1
    assert IndexPair((), ((1, 2), (3, 1))).weight == 5
    assert IndexPair(eps(2), ((2, 1),)).weight == 4
    assert ZERO_PAIR.weight == 0


def test_revlex_examples():
    assert cmp_revlex(eps(2), eps(1)) == -1
    assert cmp_revlex(eps(1), eps(1)) == 0
    assert cmp_revlex(((1, 2),), ((1, 1), (2, 1))) == 1
    assert cmp_revlex((), eps(3)) == -1


def test_principal_examples():
    a = IndexPair((), ((1, 1),))
    b = IndexPair((), ((2, 1),))
    assert cmp_principal(a, b) == -1  # weights 1 < 2
    c = IndexPair(eps(1), ((1, 1),))
    assert cmp_principal(b, c) == -1  # equal weight, k-part 0 < eps_1
    assert cmp_principal(c, c) == 0


def test_hat_and_prime():
    p = IndexPair((1, 3), ((2, 2),))
    assert p.hat_k == 1
    assert p.drop_hat_k() == IndexPair((3,), ((2, 2),))
    q = IndexPair((), ((2, 2), (5, 1)))
    assert q.hat_i == 2
    assert q.drop_hat_i() == IndexPair((), ((2, 1), (5, 1)))
    assert q.drop_hat_i().drop_hat_i() == IndexPair((), ((5, 1),))
    with pytest.raises(ValueError):
        ZERO_PAIR.hat_k


def test_monomial_round_trip():
    p = IndexPair((1, 3), ((1, 2), (4, 1)))
    m = p.to_monomial()
    assert [repr(g) for g, _ in m.factors] == ["G[-3]", "G[-1]", "L[-4]", "L[-1]"]
    assert IndexPair.from_monomial(m) == p


def random_pair(rng, max_weight=6):
    w = rng.randint(0, max_weight)
    pool = pairs_of_weight(w)
    return pool[rng.randrange(len(pool))]


def test_total_order_properties():
    rng = random.Random(23)
    pairs = [random_pair(rng) for _ in range(60)]
    for _ in range(500):
        a, b, c = (pairs[rng.randrange(len(pairs))] for _ in range(3))
        # trichotomy
        assert (cmp_principal(a, b) == 0) == (a == b)
        assert cmp_principal(a, b) == -cmp_principal(b, a)
        # transitivity
        if cmp_principal(a, b) <= 0 and cmp_principal(b, c) <= 0:
            assert cmp_principal(a, c) <= 0


def test_enumeration_counts_and_sorting():
    # graded counts match the product of the distinct-part and unrestricted
    # partition generating functions, computed independently below
    n_max = 8
    coeffs = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        # multiply by (1 + q^n)
        for d in range(n_max, n - 1, -1):
            coeffs[d] += coeffs[d - n]
    for n in range(1, n_max + 1):
        # multiply by 1/(1 - q^n)
        for d in range(n, n_max + 1):
            coeffs[d] += coeffs[d - n]
    for w in range(n_max + 1):
        pool = pairs_of_weight(w)
        assert len(pool) == coeffs[w], w
        assert all(p.weight == w for p in pool)
        assert len(set(pool)) == len(pool)
        for u, v in zip(pool, pool[1:]):
            assert cmp_principal(u, v) == -1


def test_finitely_many_below_at_fixed_weight():
    # at fixed weight every pair has finitely many predecessors; enumeration
    # of the stratum is exhaustive, so counting predecessors is well defined
    for w in range(7):
        pool = pairs_of_weight(w)
        for pos, p in enumerate(pool):
            below = [q for q in pool if cmp_principal(q, p) == -1]
            assert len(below) == pos
