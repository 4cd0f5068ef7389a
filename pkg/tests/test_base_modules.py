"""Inducing-module families: construction, derived actions, validators."""

import random
from fractions import Fraction

import pytest

from ramond import (
    C,
    G,
    L,
    BaseModuleSpec,
    PhiValidationError,
    RamondError,
    WhittakerData,
    a_phi_submodule_witness,
    b0_module,
    b1_module,
    finite_top_induction,
    phi_validate,
    shift_family,
    validate_module,
    verma_top,
    whittaker_b_module,
    whittaker_finite_top,
    window,
)


def test_verma_top_cases():
    one_dim = verma_top(Fraction(1, 24), 1)
    assert one_dim.dimension() == 1
    assert one_dim.act_gen(G(0), 0) == {}
    two_dim = verma_top(1, 0)
    assert two_dim.dimension() == 2
    assert two_dim.act_combo(G(0), two_dim.act_gen(G(0), 0)) == {0: Fraction(1)}
    assert two_dim.act_gen(L(1), 0) == {}
    assert two_dim.act_gen(L(0), 1) == {1: Fraction(1)}
    assert two_dim.parity(0) == 0 and two_dim.parity(1) == 1
    with pytest.raises(RamondError):
        verma_top(1, 0, dimension=1)
    with pytest.raises(RamondError):
        verma_top(Fraction(1, 24), 1, dimension=2)


def test_verma_top_matches_b0_table():
    # the induced construction reproduces the hand-coded classification table
    rng = random.Random(2)
    for _ in range(6):
        lam = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        l = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        vt, b0 = verma_top(lam, l), b0_module(lam, l)
        assert vt.dimension() == b0.dimension()
        for g in (L(0), G(0), L(1), G(1), L(2), G(2), C):
            for idx in range(vt.dimension()):
                assert vt.act_gen(g, idx) == b0.act_gen(g, idx), (lam, l, g)


def test_phi_validate():
    assert phi_validate(WhittakerData.make(0, {1: 0, 2: 1}, 1))["ok"]
    assert phi_validate(WhittakerData.make(1, {2: 1, 3: 0, 4: 2}, 0))["ok"]
    with pytest.raises(PhiValidationError) as err:
        phi_validate(WhittakerData.make(0, {3: 1}, 0))
    assert "[L[1], L[2]]" in str(err.value)
    with pytest.raises(PhiValidationError):
        phi_validate(WhittakerData.make(1, {1: 1}, 0))  # below the window


def test_whittaker_top_actions():
    b = Fraction(5, 2)
    data = WhittakerData.make(0, {1: 3, 2: b}, 1)
    top = whittaker_finite_top(data)
    assert top.act_gen(L(2), 0) == {0: b}
    assert top.act_gen(G(1), 0) == {1: Fraction(1)}
    # derived through the engine: G_1 u = G_1^2 w = L_2 w
    assert top.act_gen(G(1), 1) == {0: b}
    assert top.act_gen(L(1), 1) == {1: Fraction(3)}
    assert top.parity(0) == 0 and top.parity(1) == 1
    # higher-order data
    data1 = WhittakerData.make(1, {2: 1, 4: 7}, 0)
    top1 = whittaker_finite_top(data1)
    assert top1.act_gen(G(2), 0) == {1: Fraction(1)}
    assert top1.act_gen(G(2), 1) == {0: Fraction(7)}  # G_2^2 w = L_4 w


def test_finite_top_induction_enumeration():
    data = WhittakerData.make(0, {1: 2, 2: 1}, 1)
    vphi = whittaker_b_module(data)
    assert [vphi.basis_label(i) for i in range(6)] == \
        ["w", "u", "L0*w", "G0*w", "L0*u", "G0*u"]
    # L_1 (G_0 w) = (1/2) u + phi(L_1) G_0 w
    g0w = vphi.basis_index("G0*w")
    got = vphi.act_gen(L(1), g0w)
    assert got == {vphi.basis_index("u"): Fraction(1, 2), g0w: Fraction(2)}
    # centrality on the induced basis
    l0w = vphi.basis_index("L0*w")
    assert vphi.act_gen(C, l0w) == {l0w: Fraction(1)}
    assert vphi.level == 2
    assert vphi.parity(g0w) == 1 and vphi.parity(l0w) == 0


def test_finite_top_induction_rejects_bad_pairs():
    data = WhittakerData.make(0, {2: 1}, 1)
    top = whittaker_finite_top(data)
    with pytest.raises(RamondError):
        finite_top_induction(top, window(1, 1), window(2, 2), level=2)


def test_b0_module():
    spec = b0_module(2, 24)
    assert spec.act_combo(G(0), spec.act_gen(G(0), 0)) == {0: Fraction(1)}
    assert spec.act_gen(L(0), 0) == {0: Fraction(2)}
    assert b0_module(Fraction(1, 24), 1).dimension() == 1
    with pytest.raises(RamondError):
        b0_module(2, 0, dimension=1)


def test_b1_module():
    fam = shift_family(1)
    spec = b1_module(fam, 0)
    # G_1 kills the even layer
    for idx in (0, 2, 4):
        assert spec.act_gen(G(1), idx) == {}
    # commutator [L_0, L_1] acts as -L_1 on the underlying family
    for k in range(5):
        lhs = {}
        for j, q in fam.act(1, k).items():
            lhs[j + 1] = lhs.get(j + 1, 0) + q
        for j, q in fam.act(1, k + 1).items():
            lhs[j] = lhs.get(j, 0) - q
        lhs = {j: q for j, q in lhs.items() if q}
        rhs = {j: -q for j, q in fam.act(1, k).items()}
        assert lhs == rhs, k
    # G_1 (G_0 w0) = 2 L_1 w0 = 2 mu w0
    assert spec.act_gen(G(1), 1) == {0: Fraction(2)}
    assert spec.act_gen(G(0), 0) == {1: Fraction(1)}
    # G_0 (G_0 u) = (L_0 - l/24) u, here with l = 24
    spec24 = b1_module(shift_family(2), 24)
    assert spec24.act_gen(G(0), 1) == {2: Fraction(1), 0: Fraction(-1)}
    with pytest.raises(RamondError):
        shift_family(0)


def test_validate_module_families():
    assert validate_module(verma_top(1, 0), 3, 2).ok
    assert validate_module(b0_module(Fraction(3), Fraction(-2)), 2, 2).ok
    rng = random.Random(8)
    lam = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    l = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    assert validate_module(b0_module(lam, l), 2, 2).ok
    assert validate_module(b1_module(shift_family(Fraction(3, 2)), 5), 4, 8).ok
    data = WhittakerData.make(0, {2: 1}, 1)
    assert validate_module(whittaker_finite_top(data), 4, 2).ok
    assert validate_module(whittaker_b_module(data), 4, 8).ok


def test_validate_module_catches_corruption():
    data = WhittakerData.make(0, {2: 3}, 1)
    top = whittaker_finite_top(data)

    def corrupted(g, idx):
        if g == G(1) and idx == 1:
            return {}
        return top.act_gen(g, idx)

    bad = BaseModuleSpec("corrupted", top.domain, top.central_charge, top.level,
                         top.basis, corrupted)
    report = validate_module(bad, 2, 2)
    assert not report.ok
    assert any(v["x"] == "G[1]" and v["y"] == "G[1]" for v in report.violations)


def test_submodule_witness_both_directions():
    probe = a_phi_submodule_witness(WhittakerData.make(0, {1: 1, 2: 0}, 1))
    assert probe.has_witness and probe.witness == "u"
    probe = a_phi_submodule_witness(WhittakerData.make(0, {2: 3}, 1))
    assert not probe.has_witness
    probe = a_phi_submodule_witness(WhittakerData.make(1, {2: 1, 4: 0}, 0))
    assert probe.has_witness
    probe = a_phi_submodule_witness(WhittakerData.make(1, {4: Fraction(1, 3)}, 0))
    assert not probe.has_witness
    # sampled characters: closure holds exactly when the top value vanishes
    rng = random.Random(31)
    for _ in range(6):
        t = rng.randint(0, 1)
        values = {m: Fraction(rng.randint(-3, 3)) for m in range(t + 1, 2 * t + 3)}
        data = WhittakerData.make(t, values, rng.randint(-4, 4))
        probe = a_phi_submodule_witness(data)
        assert probe.has_witness == (data.value(2 * t + 2) == 0)


def test_annihilation_contract():
    specs = [
        verma_top(1, 1),
        b0_module(2, 24),
        b1_module(shift_family(1), 0),
        whittaker_b_module(WhittakerData.make(0, {2: 1}, 1)),
    ]
    for spec in specs:
        t = spec.level
        dim = spec.dimension()
        count = 8 if dim is None else min(8, dim)
        for i in range(t + 1, t + 7):
            for idx in range(count):
                assert spec.act_gen(L(i), idx) == {}, (spec.label, i, idx)
                assert spec.act_gen(G(i), idx) == {}, (spec.label, i, idx)


def test_verma_g0_square_scalar():
    lam, l = Fraction(7, 3), Fraction(4)
    spec = verma_top(lam, l)
    gap = lam - l / 24
    for idx in range(2):
        assert spec.act_combo(G(0), spec.act_gen(G(0), idx)) == {idx: gap}
