"""Generators, structure constants and named subalgebras of the Ramond algebra.

The algebra is the N=1 super-Virasoro algebra in the sector with
integer-moded odd generators: it is spanned by even elements L_m (m in Z),
odd elements G_m (m in Z) and an even central element c, with super-brackets

    [L_m, L_n] = (m - n) L_{m+n} + delta_{m+n,0} (m^3 - m)/12 c
    [L_m, G_n] = (m/2 - n) G_{m+n}
    [G_m, G_n] = 2 L_{m+n} + delta_{m+n,0} (m^2 - 1/4)/3 c
    [x, c]     = 0

The odd-odd bracket is the anticommutator, so in the enveloping algebra
G_m^2 = (1/2)[G_m, G_m].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Gen:
    """A basis element: L_m, G_m, or the central c (kind 'C', index 0)."""

    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind not in ("L", "G", "C"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "C" and self.index != 0:
            raise ValueError("the central element carries index 0")

    def __repr__(self):
        if self.kind == "C":
            return "c"
        return f"{self.kind}[{self.index}]"


def L(m: int) -> Gen:
    return Gen("L", m)


def G(m: int) -> Gen:
    return Gen("G", m)


C = Gen("C", 0)


def parity(x: Gen) -> int:
    """0 for even (L_m, c), 1 for odd (G_m)."""
    return 1 if x.kind == "G" else 0


def grading_index(x: Gen) -> int:
    """Eigenvalue of ad(-L_0): m for L_m and G_m, 0 for c."""
    return 0 if x.kind == "C" else x.index


def bracket_pairs(x: Gen, y: Gen) -> tuple[tuple[Fraction, Gen], ...]:
    """Super-bracket [x, y] as (coefficient, generator) pairs.

    At most two pairs: one L/G generator plus possibly a central term.
    Zero coefficients are dropped.
    """
    if x.kind == "C" or y.kind == "C":
        return ()
    m, n = x.index, y.index
    out = []
    if x.kind == "L" and y.kind == "L":
        if m != n:
            out.append((Fraction(m - n), L(m + n)))
        if m + n == 0:
            q = Fraction(m**3 - m, 12)
            if q:
                out.append((q, C))
    elif x.kind == "L" and y.kind == "G":
        q = Fraction(m, 2) - n
        if q:
            out.append((q, G(m + n)))
    elif x.kind == "G" and y.kind == "L":
        # [G_m, L_n] = -[L_n, G_m] (odd-even pair)
        q = -(Fraction(n, 2) - m)
        if q:
            out.append((q, G(m + n)))
    else:
        out.append((Fraction(2), L(m + n)))
        if m + n == 0:
            out.append((Fraction(4 * m * m - 1, 12), C))
    return tuple(out)


@dataclass(frozen=True)
class Subalgebra:
    """A named graded subalgebra, used for membership tests and splitting.

    Kinds:
      'r+'      positive part, span{L_m, G_m : m >= 1}
      'r-'      negative part, span{L_m, G_m : m <= -1}
      'r0'      zero part, span{L_0, G_0, c}
      'b'       nonnegative part plus centre
      'm'       span{L_m, G_m : m > a} (no centre)
      'bq'      truncation span{L_m, G_m : 0 <= m <= a} plus centre
      'p'       span{L_m : m > a} + span{G_n : n > a+1} (Whittaker domain)
      'window'  span{L_i : i >= a} + span{G_j : j >= b} plus centre
    """

    kind: str
    a: int = 0
    b: int = 0

    def contains(self, g: Gen) -> bool:
        k = self.kind
        if g.kind == "C":
            return k in ("r0", "b", "bq") or k == "window"
        m = g.index
        if k == "r+":
            return m >= 1
        if k == "r-":
            return m <= -1
        if k == "r0":
            return m == 0
        if k == "b":
            return m >= 0
        if k == "m":
            return m > self.a
        if k == "bq":
            return 0 <= m <= self.a
        if k == "p":
            return m > self.a if g.kind == "L" else m > self.a + 1
        if k == "window":
            return m >= self.a if g.kind == "L" else m >= self.b
        raise ValueError(f"unknown subalgebra kind {k!r}")

    def __repr__(self):
        names = {"r+": "R+", "r-": "R-", "r0": "R0", "b": "b"}
        if self.kind in names:
            return names[self.kind]
        if self.kind == "m":
            return f"m({self.a})"
        if self.kind == "bq":
            return f"b({self.a})"
        if self.kind == "p":
            return f"p({self.a})"
        return f"R({self.a},{self.b})"


R_PLUS = Subalgebra("r+")
R_MINUS = Subalgebra("r-")
R_ZERO = Subalgebra("r0")
BOREL = Subalgebra("b")


def m_above(t: int) -> Subalgebra:
    """Generators of grading index strictly above t, without the centre."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return Subalgebra("m", t)


def b_truncated(t: int) -> Subalgebra:
    """Generators of the quotient of the nonnegative part by m_above(t)."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return Subalgebra("bq", t)


def whittaker_domain(t: int) -> Subalgebra:
    """L-modes above t together with G-modes above t+1."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return Subalgebra("p", t)


def window(m: int, n: int) -> Subalgebra:
    """L-modes from m up and G-modes from n up, plus the centre."""
    return Subalgebra("window", m, n)


def is_member(x: Gen, s: Subalgebra) -> bool:
    return s.contains(x)
