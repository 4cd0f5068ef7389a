"""Exponent bookkeeping for negative-part monomials and the degree orders.

An IndexPair (k, i) records the exponents of a monomial

    G_{-a}...G_{-1} L_{-b}^{e_b}...L_{-1}^{e_1}

as sparse vectors over the positive integers: k lists the positions of the
(multiplicity-one) G-factors, i lists (position, exponent) pairs for the
L-factors.  Its weight is sum n*(k_n + i_n).

Two total orders drive the degree reduction: the reverse-lexicographic
order compares sparse vectors at their smallest differing position, and the
principal order compares pairs by weight, then k, then i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key

from .generators import G, L
from .pbw import PBWMonomial


@dataclass(frozen=True)
class IndexPair:
    """Sparse exponents (k, i); k positions strictly increasing, i by position."""

    k: tuple[int, ...] = ()
    i: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if any(n < 1 for n in self.k) or list(self.k) != sorted(set(self.k)):
            raise ValueError("k must list distinct positive positions in order")
        prev = 0
        for n, e in self.i:
            if n <= prev or e < 1:
                raise ValueError("i must pair increasing positions with positive exponents")
            prev = n

    @property
    def weight(self) -> int:
        return sum(self.k) + sum(n * e for n, e in self.i)

    def is_zero(self) -> bool:
        return not self.k and not self.i

    @property
    def hat_k(self) -> int:
        if not self.k:
            raise ValueError("hat is undefined for the zero vector")
        return self.k[0]

    @property
    def hat_i(self) -> int:
        if not self.i:
            raise ValueError("hat is undefined for the zero vector")
        return self.i[0][0]

    def drop_hat_k(self) -> "IndexPair":
        return IndexPair(self.k[1:], self.i)

    def drop_hat_i(self) -> "IndexPair":
        n, e = self.i[0]
        rest = ((n, e - 1),) if e > 1 else ()
        return IndexPair(self.k, rest + self.i[1:])

    def to_monomial(self) -> PBWMonomial:
        factors = [(G(-n), 1) for n in sorted(self.k, reverse=True)]
        factors += [(L(-n), e) for n, e in sorted(self.i, reverse=True)]
        return PBWMonomial(0, tuple(factors))

    @staticmethod
    def from_monomial(m: PBWMonomial) -> "IndexPair":
        if m.cexp:
            raise ValueError("negative-part monomials carry no central power")
        ks, iis = [], []
        for g, e in m.factors:
            if g.index >= 0:
                raise ValueError(f"factor {g!r} is not in the negative part")
            if g.kind == "G":
                ks.append(-g.index)
            else:
                iis.append((-g.index, e))
        return IndexPair(tuple(sorted(ks)), tuple(sorted(iis)))

    def text(self) -> str:
        if self.is_zero():
            return "1"
        parts = [f"G[{-n}]" for n in sorted(self.k, reverse=True)]
        for n, e in sorted(self.i, reverse=True):
            parts.append(f"L[{-n}]" + (f"^{e}" if e > 1 else ""))
        return "*".join(parts)

    def __repr__(self):
        return self.text()


ZERO_PAIR = IndexPair()


def _entries(sparse) -> dict[int, int]:
    if not sparse:
        return {}
    first = sparse[0]
    if isinstance(first, tuple):
        return dict(sparse)
    return {n: 1 for n in sparse}


def cmp_revlex(u, v) -> int:
    """-1, 0 or 1: the smallest position where the vectors differ decides."""
    du, dv = _entries(u), _entries(v)
    for n in sorted(set(du) | set(dv)):
        eu, ev = du.get(n, 0), dv.get(n, 0)
        if eu != ev:
            return -1 if eu < ev else 1
    return 0


def cmp_principal(a: IndexPair, b: IndexPair) -> int:
    """Compare by weight, then k under revlex, then i under revlex."""
    if a.weight != b.weight:
        return -1 if a.weight < b.weight else 1
    ck = cmp_revlex(a.k, b.k)
    if ck:
        return ck
    return cmp_revlex(a.i, b.i)


principal_key = cmp_to_key(cmp_principal)


def _distinct_partitions(n: int):
    """All strictly decreasing positive tuples summing to n (n = 0 gives ())."""

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first - 1):
                yield (first,) + tail

    yield from rec(n, n)


def _partitions(n: int):
    """All weakly decreasing positive tuples summing to n."""

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    yield from rec(n, n)


def pairs_of_weight(n: int) -> list[IndexPair]:
    """Every IndexPair of weight n, sorted ascending under the principal order."""
    out = []
    for wk in range(n + 1):
        for kpart in _distinct_partitions(wk):
            k = tuple(sorted(kpart))
            for ipart in _partitions(n - wk):
                counts: dict[int, int] = {}
                for p in ipart:
                    counts[p] = counts.get(p, 0) + 1
                i = tuple(sorted(counts.items()))
                out.append(IndexPair(k, i))
    out.sort(key=principal_key)
    return out
