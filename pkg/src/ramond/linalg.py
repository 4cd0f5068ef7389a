"""Exact kernel computation for small dense rational matrices."""

from fractions import Fraction


def nullspace(rows, ncols):
    """Basis of {x : A x = 0} for A given as a list of Fraction rows.

    Elimination is exact over the rationals with deterministic pivoting:
    columns are processed left to right and the first row with a nonzero
    entry is selected, so the returned basis depends only on the input.
    Each basis vector sets one free coordinate to 1 and the others to 0.
    """
    mat = [list(r) for r in rows]
    for r in mat:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
    pivots = []  # (row, col), in elimination order
    row = 0
    for col in range(ncols):
        sel = None
        for r in range(row, len(mat)):
            if mat[r][col]:
                sel = r
                break
        if sel is None:
            continue
        if sel != row:
            mat[row], mat[sel] = mat[sel], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [x * inv for x in mat[row]]
        for r in range(len(mat)):
            if r != row and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[row])]
        pivots.append((row, col))
        row += 1
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, c in pivots:
            vec[c] = -mat[r][free]
        basis.append(vec)
    return basis
