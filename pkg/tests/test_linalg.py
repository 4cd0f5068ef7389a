"""Exact rational kernel computation."""

import random
from fractions import Fraction

from ramond.linalg import nullspace


def test_simple_kernels():
    f = Fraction
    assert nullspace([[f(1), f(0)], [f(0), f(1)]], 2) == []
    basis = nullspace([[f(1), f(2)]], 2)
    assert len(basis) == 1
    x = basis[0]
    assert x[0] + 2 * x[1] == 0
    assert nullspace([[f(0), f(0)]], 2) == [
        [f(1), f(0)],
        [f(0), f(1)],
    ]


def test_random_matrices_exact():
    rng = random.Random(9)
    for _ in range(40):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        mat = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)]
               for _ in range(rows)]
        basis = nullspace(mat, cols)
        # every basis vector is in the kernel
        for vec in basis:
            for row in mat:
                assert sum(a * b for a, b in zip(row, vec)) == 0
        # rank-nullity against an independent rank computation
        m = [row[:] for row in mat]
        rank = 0
        for col in range(cols):
            piv = next((r for r in range(rank, rows) if m[r][col]), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            for r in range(rows):
                if r != rank and m[r][col]:
                    f = m[r][col] / m[rank][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
            rank += 1
        assert len(basis) == cols - rank


def test_determinism():
    rng = random.Random(11)
    mat = [[Fraction(rng.randint(-3, 3)) for _ in range(6)] for _ in range(3)]
    assert nullspace(mat, 6) == nullspace([row[:] for row in mat], 6)
