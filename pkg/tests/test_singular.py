"""Singular-vector search against an independently assembled level-1 system.

The level-1 subspace of a generic highest-weight module has basis
(L_{-1}v, G_{-1}v, L_{-1}G_0v, G_{-1}G_0v) and the actions of L_1 and G_1
were worked out by hand from the brackets:

    L_1: 2a v ,  (3/2)b G_0v ,  2a G_0v ,  (3/2)(a - b/24) v
    G_1: (3/2) G_0v ,  (2a + b/4) v ,  (3/2)(a - b/24) v ,  (2a + b/4) G_0v

per column, with (a, b) = (lambda, central charge).  Both 2x2 blocks share
the determinant 2a(2a + b/4) - (9/4)(a - b/24), which at b = 1 is
(128 a^2 - 56 a + 3)/32.
"""

import random
from fractions import Fraction

import pytest

from ramond import G, L, RamondError, singular_vectors, verma_module
from ramond.linalg import nullspace
from ramond.ordering import IndexPair


def hand_level1_matrix(lam, l):
    lam, l = Fraction(lam), Fraction(l)
    gap = Fraction(3, 2) * (lam - l / 24)
    z = Fraction(0)
    # columns: L_{-1}v, G_{-1}v, L_{-1}G_0v, G_{-1}G_0v
    # rows: L_1 image on (v, G_0v), then G_1 image on (v, G_0v)
    return [
        [2 * lam, z, z, gap],
        [z, Fraction(3, 2), 2 * lam, z],
        [z, 2 * lam + l / 4, gap, z],
        [Fraction(3, 2), z, z, 2 * lam + l / 4],
    ]


def block_determinant(lam, l):
    lam, l = Fraction(lam), Fraction(l)
    return 2 * lam * (2 * lam + l / 4) - Fraction(9, 4) * (lam - l / 24)


def test_block_determinant_polynomial():
    lam = Fraction(3, 8)
    assert 128 * lam**2 - 56 * lam + 3 == 0
    assert block_determinant(lam, 1) == 0
    assert block_determinant(1, 1) == Fraction(75, 32)
    # determinant formula agrees with the hand matrix determinant blockwise
    rng = random.Random(12)
    for _ in range(10):
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 6))
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 6))
        m = hand_level1_matrix(a, b)
        det_ae = m[0][0] * m[3][3] - m[0][3] * m[3][0]
        det_bd = m[2][1] * m[1][2] - m[2][2] * m[1][1]
        assert det_ae == block_determinant(a, b)
        assert det_bd == block_determinant(a, b)


def test_level1_against_hand_oracle():
    for lam, l in [(1, 1), (Fraction(3, 8), 1), (2, 3), (Fraction(-1, 2), Fraction(5, 7))]:
        hand_kernel = nullspace(hand_level1_matrix(lam, l), 4)
        got = singular_vectors(lam, l, 1)
        assert len(got) == len(hand_kernel), (lam, l)
        # solver vectors satisfy the hand-built equations
        order = [
            (IndexPair((), ((1, 1),)), 0),
            (IndexPair((1,), ()), 0),
            (IndexPair((), ((1, 1),)), 1),
            (IndexPair((1,), ()), 1),
        ]
        for vec in got:
            coords = [vec.terms.get(key, Fraction(0)) for key in order]
            for row in hand_level1_matrix(lam, l):
                assert sum(a * b for a, b in zip(row, coords)) == 0


def test_level1_dimension_for_generic_weight():
    module = verma_module(5, 7, max_weight=3)
    assert len(module.level_basis(1)) == 4


def test_degenerate_point_has_two_dim_kernel():
    found = singular_vectors(Fraction(3, 8), 1, 1)
    assert len(found) == 2
    module = found[0].module
    for vec in found:
        assert module.act_gen(L(1), vec).is_zero()
        assert module.act_gen(G(1), vec).is_zero()
        assert module.act_gen(L(2), vec).is_zero()
        assert module.act_gen(G(2), vec).is_zero()


def test_generic_points_have_no_singular_vectors():
    assert singular_vectors(1, 1, 1) == []
    assert singular_vectors(1, 1, 2) == []
    assert singular_vectors(Fraction(5, 3), Fraction(-2), 1) == []


def test_reapplication_check_is_live():
    found = singular_vectors(Fraction(3, 8), 1, 1)
    module = found[0].module
    nonsingular = module.tensor(IndexPair((), ((1, 1),)), 0)
    assert not module.act_gen(L(1), nonsingular).is_zero()


def test_level_validation():
    with pytest.raises(RamondError):
        singular_vectors(1, 1, 0)
