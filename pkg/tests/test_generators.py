"""Structure constants, parities, grading and subalgebra membership."""

from fractions import Fraction

import pytest

from ramond import (
    BOREL,
    C,
    G,
    L,
    R_MINUS,
    R_PLUS,
    R_ZERO,
    b_truncated,
    bracket,
    element,
    grading_index,
    is_member,
    m_above,
    parity,
    whittaker_domain,
    window,
)
from ramond.generators import bracket_pairs


def brk(pairs):
    from ramond.pbw import AlgebraElement

    return AlgebraElement.from_pairs(pairs)


def test_bracket_table():
    assert bracket(L(2), L(-2)) == 4 * element(L(0)) + Fraction(1, 2) * element(C)
    assert bracket(G(1), G(-1)) == 2 * element(L(0)) + Fraction(1, 4) * element(C)
    assert bracket(G(2), G(-2)) == 2 * element(L(0)) + Fraction(5, 4) * element(C)
    assert bracket(L(3), G(-1)) == Fraction(5, 2) * element(G(2))
    assert bracket(C, L(5)).is_zero()


def test_odd_odd_is_anticommutator():
    # [G_m, G_m] = 2 L_{2m} + central part, nonzero for every m
    assert bracket(G(3), G(3)) == 2 * element(L(6))
    assert bracket(G(0), G(0)) == 2 * element(L(0)) - Fraction(1, 12) * element(C)


def test_parity_and_grading():
    assert parity(L(0)) == 0
    assert parity(G(-3)) == 1
    assert parity(C) == 0
    assert grading_index(L(-2)) == -2
    assert grading_index(G(7)) == 7
    assert grading_index(C) == 0


def test_membership_examples():
    assert not is_member(G(1), whittaker_domain(0))
    assert is_member(G(2), whittaker_domain(0))
    assert is_member(L(0), BOREL)
    assert not is_member(G(0), window(0, 1))
    assert is_member(C, window(0, 1))
    assert is_member(L(3), m_above(2))
    assert not is_member(C, m_above(2))
    assert is_member(C, BOREL)
    assert not is_member(L(-1), BOREL)
    assert is_member(L(-1), R_MINUS)
    assert is_member(G(0), R_ZERO)
    assert is_member(G(4), R_PLUS)
    assert is_member(L(1), b_truncated(1)) and not is_member(L(2), b_truncated(1))
    # m_above(0) agrees with the positive part on generators
    for i in range(-4, 5):
        for g in (L(i), G(i)):
            assert is_member(g, m_above(0)) == is_member(g, R_PLUS)
    # whittaker_domain(0) matches its description
    assert is_member(L(1), whittaker_domain(0))
    assert not is_member(L(0), whittaker_domain(0))


ALL_GENS_8 = [C] + [x(i) for i in range(-8, 9) for x in (L, G)]


def test_super_skew_symmetry():
    for x in ALL_GENS_8:
        for y in ALL_GENS_8:
            sign = -1 if (parity(x) and parity(y)) else 1
            assert bracket(x, y) == bracket(y, x).scaled(-sign), (x, y)


def _nested(x, y, z):
    """[x, [y, z]] through the structure constants alone."""
    out = {}
    for q, g in bracket_pairs(y, z):
        if g.kind == "C":
            continue
        for r, h in bracket_pairs(x, g):
            key = h
            acc = out.get(key, 0) + q * r
            if acc:
                out[key] = acc
            elif key in out:
                del out[key]
    return out


def jacobi_defect(x, y, z):
    total = {}
    for (a, b, c) in ((x, y, z), (y, z, x), (z, x, y)):
        sign = -1 if (parity(a) and parity(c)) else 1
        for g, q in _nested(a, b, c).items():
            acc = total.get(g, 0) + sign * q
            if acc:
                total[g] = acc
            elif g in total:
                del total[g]
    return total


def test_super_jacobi_small():
    gens = [C] + [x(i) for i in range(-3, 4) for x in (L, G)]
    for x in gens:
        for y in gens:
            for z in gens:
                assert not jacobi_defect(x, y, z), (x, y, z)


def test_grading_compatibility_and_centrality():
    gens = [x(i) for i in range(-6, 7) for x in (L, G)]
    for x in gens:
        for y in gens:
            for q, g in bracket_pairs(x, y):
                if g.kind == "C":
                    assert grading_index(x) + grading_index(y) == 0
                else:
                    assert grading_index(g) == grading_index(x) + grading_index(y)
        assert bracket(C, x).is_zero()
        assert bracket(x, C).is_zero()


def test_gen_validation():
    with pytest.raises(ValueError):
        from ramond.generators import Gen

        Gen("C", 3)
    with pytest.raises(ValueError):
        from ramond.generators import Gen

        Gen("X", 1)
