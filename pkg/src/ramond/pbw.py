"""PBW-normal monomials and exact arithmetic in the enveloping algebra.

A monomial is a power of the central element times an ordered word in the
L/G generators.  The canonical generator order puts negative G-modes first,
then negative L-modes, then L_0, G_0, and finally positive L- and G-modes:

    G_{-m} < L_{-m} < L_0 < G_0 < L_m < G_m      (m > 0, indices ascending
                                                  inside each block)

so the negative block of a normal word is exactly a product
G_{-a}...G_{-1} L_{-b}^{e_b}...L_{-1}^{e_1} and annihilating modes sit
rightmost.  Odd generators never carry an exponent above 1: adjacent equal
G-factors contract through (1/2)[G_m, G_m].

Multiplication rewrites concatenated words into normal form by swapping the
rightmost out-of-order adjacent pair x*y -> (-1)^{|x||y|} y*x + [x, y] until
no such pair remains.  Any total generator order yields a PBW basis, and the
rewriter accepts an alternative "boundary-adapted" order that ranks the
factors of a chosen subalgebra last; induced-module actions use it so that
acting factors always form a suffix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import SplitError
from .generators import C, Gen, Subalgebra, bracket_pairs, parity


def canonical_rank(g: Gen) -> tuple[int, int]:
    m = g.index
    if m < 0:
        return (0, m) if g.kind == "G" else (1, m)
    if m == 0:
        return (2, 0) if g.kind == "L" else (3, 0)
    return (4, m) if g.kind == "L" else (5, m)


def boundary_rank(boundary: Subalgebra):
    """Generator order that ranks members of `boundary` after everything else."""

    def rank(g: Gen) -> tuple[int, int, int]:
        inside = 1 if boundary.contains(g) else 0
        return (inside,) + canonical_rank(g)

    return rank


@dataclass(frozen=True)
class PBWMonomial:
    """c^cexp times an ordered word of L/G factors with positive exponents.

    Factors are strictly increasing under the canonical rank and G-factors
    carry exponent exactly 1.
    """

    cexp: int = 0
    factors: tuple[tuple[Gen, int], ...] = ()

    def __post_init__(self):
        if self.cexp < 0:
            raise ValueError("negative central exponent")
        prev = None
        for g, e in self.factors:
            if g.kind == "C":
                raise ValueError("central element belongs in cexp, not factors")
            if e < 1:
                raise ValueError("factor exponents must be positive")
            if g.kind == "G" and e != 1:
                raise ValueError("odd factors carry exponent 1")
            r = canonical_rank(g)
            if prev is not None and r <= prev:
                raise ValueError("factors out of canonical order")
            prev = r

    def word(self) -> tuple[Gen, ...]:
        out = []
        for g, e in self.factors:
            out.extend([g] * e)
        return tuple(out)

    def parity(self) -> int:
        return sum(1 for g, _ in self.factors if g.kind == "G") & 1

    def grading(self) -> int:
        return sum(g.index * e for g, e in self.factors)

    def length(self) -> int:
        return sum(e for _, e in self.factors)

    def sort_key(self):
        # nonempty words first, ordered by their rank sequences; pure
        # central-power terms last
        if self.factors:
            seq = tuple(canonical_rank(g) + (e,) for g, e in self.factors)
            return (0, seq, self.cexp)
        return (1, (), self.cexp)

    def __repr__(self):
        parts = [f"{g!r}^{e}" if e > 1 else repr(g) for g, e in self.factors]
        if self.cexp == 1:
            parts.append("c")
        elif self.cexp > 1:
            parts.append(f"c^{self.cexp}")
        return "*".join(parts) if parts else "1"


ONE_MONOMIAL = PBWMonomial()


def monomial_from_word(word, cexp=0) -> PBWMonomial:
    """Run-length encode an already canonically sorted word."""
    factors = []
    for g in word:
        if factors and factors[-1][0] == g:
            factors[-1] = (g, factors[-1][1] + 1)
        else:
            factors.append((g, 1))
    return PBWMonomial(cexp, tuple(factors))


def _word_inversions(word, rank) -> int:
    n = len(word)
    ranks = [rank(g) for g in word]
    return sum(1 for p in range(n) for q in range(p + 1, n) if ranks[p] > ranks[q])


def rewrite_word(word, rank=canonical_rank, trace=None):
    """Normal-order a word under `rank`; returns {(cexp, word): coefficient}.

    Strategy: always rewrite the rightmost out-of-order (or contractible)
    adjacent pair.  When `trace` is a list, every rewrite appends a pair of
    (word length, inversion count) measures for the parent and child words.
    """
    stack = [(Fraction(1), 0, tuple(word))]
    out: dict[tuple[int, tuple[Gen, ...]], Fraction] = {}
    while stack:
        coeff, ce, w = stack.pop()
        pos = -1
        for p in range(len(w) - 1, 0, -1):
            x, y = w[p - 1], w[p]
            if (x == y and x.kind == "G") or rank(x) > rank(y):
                pos = p
                break
        if pos == -1:
            key = (ce, w)
            q = out.get(key, 0) + coeff
            if q:
                out[key] = q
            elif key in out:
                del out[key]
            continue
        if trace is not None:
            parent = (len(w), _word_inversions(w, rank))
        x, y = w[pos - 1], w[pos]
        head, tail = w[: pos - 1], w[pos + 1 :]
        children = []
        if x == y:
            # odd square: x*x = (1/2)[x, x]
            for q, g in bracket_pairs(x, x):
                if g.kind == "C":
                    children.append((coeff * q / 2, ce + 1, head + tail))
                else:
                    children.append((coeff * q / 2, ce, head + (g,) + tail))
        else:
            sign = -1 if (x.kind == "G" and y.kind == "G") else 1
            children.append((coeff * sign, ce, head + (y, x) + tail))
            for q, g in bracket_pairs(x, y):
                if g.kind == "C":
                    children.append((coeff * q, ce + 1, head + tail))
                else:
                    children.append((coeff * q, ce, head + (g,) + tail))
        for child in children:
            if trace is not None:
                trace.append((parent, (len(child[2]), _word_inversions(child[2], rank))))
            stack.append(child)
    return out


@lru_cache(maxsize=1 << 16)
def _multiply_words(word_a: tuple, word_b: tuple):
    return rewrite_word(word_a + word_b)


def monomial_multiply(a: PBWMonomial, b: PBWMonomial) -> "AlgebraElement":
    """Normal form of the concatenation a*b."""
    terms = {}
    for (ce, w), q in _multiply_words(a.word(), b.word()).items():
        mono = monomial_from_word(w, a.cexp + b.cexp + ce)
        acc = terms.get(mono, 0) + q
        if acc:
            terms[mono] = acc
        elif mono in terms:
            del terms[mono]
    return AlgebraElement(terms)


class AlgebraElement:
    """Finite rational linear combination of PBW-normal monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[PBWMonomial, Fraction] = {}
        if terms:
            for m, q in terms.items():
                q = Fraction(q)
                if q:
                    self.terms[m] = q

    @staticmethod
    def zero() -> "AlgebraElement":
        return AlgebraElement()

    @staticmethod
    def one() -> "AlgebraElement":
        return AlgebraElement({ONE_MONOMIAL: Fraction(1)})

    @staticmethod
    def from_gen(g: Gen) -> "AlgebraElement":
        if g.kind == "C":
            return AlgebraElement({PBWMonomial(1, ()): Fraction(1)})
        return AlgebraElement({PBWMonomial(0, ((g, 1),)): Fraction(1)})

    @staticmethod
    def from_pairs(pairs) -> "AlgebraElement":
        terms = {}
        for q, g in pairs:
            mono = PBWMonomial(1, ()) if g.kind == "C" else PBWMonomial(0, ((g, 1),))
            acc = terms.get(mono, 0) + Fraction(q)
            if acc:
                terms[mono] = acc
            elif mono in terms:
                del terms[mono]
        return AlgebraElement(terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        terms = dict(self.terms)
        for m, q in other.terms.items():
            acc = terms.get(m, 0) + q
            if acc:
                terms[m] = acc
            elif m in terms:
                del terms[m]
        return AlgebraElement(terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return AlgebraElement({m: -q for m, q in self.terms.items()})

    def scaled(self, q) -> "AlgebraElement":
        q = Fraction(q)
        if not q:
            return AlgebraElement()
        return AlgebraElement({m: c * q for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def parity(self):
        """0 or 1 when every monomial has the same G-count parity, else None."""
        if not self.terms:
            return 0
        parities = {m.parity() for m in self.terms}
        return parities.pop() if len(parities) == 1 else None

    def adjoint_weight(self):
        """Common grading index of all monomials, or None if mixed."""
        if not self.terms:
            return 0
        grades = {m.grading() for m in self.terms}
        return grades.pop() if len(grades) == 1 else None

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{q}*{m!r}" for m, q in self.sorted_terms())


def element(g: Gen) -> AlgebraElement:
    return AlgebraElement.from_gen(g)


def product_of(gens) -> AlgebraElement:
    """Normal form of an arbitrary generator word (central factors allowed)."""
    ce = sum(1 for g in gens if g.kind == "C")
    word = tuple(g for g in gens if g.kind != "C")
    terms = {}
    for (dce, w), q in rewrite_word(word).items():
        mono = monomial_from_word(w, ce + dce)
        acc = terms.get(mono, 0) + q
        if acc:
            terms[mono] = acc
        elif mono in terms:
            del terms[mono]
    return AlgebraElement(terms)


def bracket(x: Gen, y: Gen) -> AlgebraElement:
    """Structure-constant super-bracket of two generators."""
    return AlgebraElement.from_pairs(bracket_pairs(x, y))


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of normal-ordered monomial multiplication."""
    out = AlgebraElement()
    for ma, qa in a.terms.items():
        for mb, qb in b.terms.items():
            out = out + monomial_multiply(ma, mb).scaled(qa * qb)
    return out


def super_commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """a*b - (-1)^{|a||b|} b*a for parity-homogeneous a and b."""
    pa, pb = a.parity(), b.parity()
    if pa is None or pb is None:
        raise ValueError("super_commutator requires parity-homogeneous inputs")
    sign = -1 if (pa and pb) else 1
    return multiply(a, b) - multiply(b, a).scaled(sign)


def adjoint_weight(a: AlgebraElement):
    return a.adjoint_weight()


def split_for_induction(m: PBWMonomial, boundary: Subalgebra):
    """Factor m as (outside-boundary prefix) * (inside-boundary suffix).

    The suffix keeps the central power.  Raises SplitError when a boundary
    factor precedes a non-boundary factor; callers should then normal-order
    with the boundary-adapted rank instead of the canonical one.
    """
    if not boundary.contains(C):
        raise SplitError(f"boundary {boundary!r} does not contain the centre")
    cut = len(m.factors)
    for pos, (g, _) in enumerate(m.factors):
        if boundary.contains(g):
            cut = pos
            break
    for g, _ in m.factors[cut:]:
        if not boundary.contains(g):
            raise SplitError(
                f"monomial {m!r} does not split at {boundary!r}: "
                "re-normalize with the boundary-adapted rank",
                witness=repr(m),
            )
    return (
        PBWMonomial(0, m.factors[:cut]),
        PBWMonomial(m.cexp, m.factors[cut:]),
    )
