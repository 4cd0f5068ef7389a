"""Text input: expression and vector grammar, module-spec strings.

Expression grammar (whitespace insignificant):

    expr     := term (("+"|"-") term)*
    term     := (rational "*")? factor ("*" factor)*
    factor   := gen ("^" nat)? | "(" expr ")"
    gen      := ("L"|"G") "[" int "]" | "c"
    rational := int ("/" nat)?
    vector   := vecterm (("+"|"-") vecterm)*
    vecterm  := expr "|" label | rational "|" label

The bare-rational vector term is an extension of the expression grammar so
that vectors lying in the base (empty negative part) can be written down;
expression parsing itself is exactly the grammar above.  Parse errors carry
the offset and the expected token.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError, RamondError
from .generators import C, G, L
from .pbw import AlgebraElement, element

_LABEL_RE = re.compile(r"[A-Za-z0-9_*^]+")
_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?\Z")


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch):
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch, what=None):
        if not self.eat(ch):
            raise ParseError(self.text, self.pos, what or repr(ch))

    def read_nat(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError(self.text, start, "a digit")
        return int(self.text[start:self.pos])

    def read_int(self):
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        n = self.read_nat()
        return -n if self.text[start] == "-" else n

    def at_rational(self):
        c = self.peek()
        if c.isdigit():
            return True
        if c == "-":
            nxt = self.pos + 1
            return nxt < len(self.text) and self.text[nxt].isdigit()
        return False

    def read_rational(self):
        num = self.read_int()
        if self.pos < len(self.text) and self.text[self.pos] == "/":
            self.pos += 1
            den = self.read_nat()
            if den == 0:
                raise ParseError(self.text, self.pos, "a nonzero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def read_label(self):
        self.skip_ws()
        m = _LABEL_RE.match(self.text, self.pos)
        if not m:
            raise ParseError(self.text, self.pos, "a basis label")
        self.pos = m.end()
        return m.group(0)

    def done(self):
        self.skip_ws()
        return self.pos >= len(self.text)


def _parse_gen(sc: _Scanner):
    c = sc.peek()
    if c == "c":
        sc.pos += 1
        return C
    if c in ("L", "G"):
        sc.pos += 1
        sc.expect("[")
        idx = sc.read_int()
        sc.expect("]")
        return L(idx) if c == "L" else G(idx)
    raise ParseError(sc.text, sc.pos, "a generator L[m], G[m] or c")


def _parse_factor(sc: _Scanner) -> AlgebraElement:
    if sc.peek() == "(":
        sc.pos += 1
        inner = _parse_expr(sc)
        sc.expect(")")
        return inner
    g = _parse_gen(sc)
    exp = 1
    if sc.eat("^"):
        exp = sc.read_nat()
    out = AlgebraElement.one()
    base = element(g)
    for _ in range(exp):
        out = out * base
    return out


def _parse_term(sc: _Scanner) -> AlgebraElement:
    coeff = Fraction(1)
    if sc.at_rational():
        coeff = sc.read_rational()
        sc.expect("*", "'*' after a coefficient")
    out = _parse_factor(sc)
    while sc.eat("*"):
        out = out * _parse_factor(sc)
    return out.scaled(coeff)


def _parse_expr(sc: _Scanner) -> AlgebraElement:
    out = _parse_term(sc)
    while True:
        c = sc.peek()
        if c == "+":
            sc.pos += 1
            out = out + _parse_term(sc)
        elif c == "-":
            sc.pos += 1
            out = out - _parse_term(sc)
        else:
            return out


def parse_expression(text: str) -> AlgebraElement:
    """Parse an enveloping-algebra expression to its normal form."""
    sc = _Scanner(text)
    out = _parse_expr(sc)
    if not sc.done():
        raise ParseError(text, sc.pos, "end of input or an operator")
    return out


def parse_vector(text: str, module) -> "ModuleVector":
    """Parse `expr|label +/- ...` against an induced module's base labels."""
    from .induced import ModuleVector  # noqa: F401  (return type)

    sc = _Scanner(text)
    total = module.zero()
    sign = Fraction(1)
    while True:
        start = sc.pos
        if sc.at_rational():
            coeff = sc.read_rational()
            if sc.peek() == "|":
                elem = AlgebraElement.one().scaled(coeff)
            else:
                sc.pos = start
                elem = _parse_expr(sc)
        else:
            elem = _parse_expr(sc)
        sc.expect("|", "'|' before a basis label")
        label = sc.read_label()
        try:
            idx = module.base.basis_index(label)
        except ValueError:
            raise ParseError(text, sc.pos - len(label), "a known basis label") from None
        from .ordering import ZERO_PAIR

        seed = module.tensor(ZERO_PAIR, idx)
        total = total + module.act(elem, seed).scaled(sign)
        c = sc.peek()
        if c == "+":
            sign = Fraction(1)
            sc.pos += 1
        elif c == "-":
            sign = Fraction(-1)
            sc.pos += 1
        else:
            break
    if not sc.done():
        raise ParseError(text, sc.pos, "end of input")
    return total


def parse_rational(text: str) -> Fraction:
    """Strict exact-rational literal: int, optionally /nat."""
    body = text.strip()
    if not _RATIONAL_RE.match(body):
        raise ParseError(text, 0, "an exact rational p or p/q")
    if "/" in body and int(body.split("/")[1]) == 0:
        raise ParseError(text, body.index("/") + 1, "a nonzero denominator")
    return Fraction(body)


def parse_module_spec(text: str):
    """Build a base module from its flag encoding.

    Forms: verma:lambda=<q>,c=<q> ; whittaker:t=<n>,c=<q>,phi=L<k>=<q>;...
    b0:lambda=<q>,c=<q> ; b1:mu=<q>,c=<q>.
    """
    from .base_modules import WhittakerData, b0_module, b1_module, shift_family, verma_top, whittaker_b_module

    head, sep, rest = text.partition(":")
    family = head.strip()
    if not sep:
        raise ParseError(text, len(text), "':' after the family name")
    fields = {}
    for chunk in rest.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, eq, val = chunk.partition("=")
        if not eq:
            raise ParseError(text, text.find(chunk), "'=' inside a module field")
        fields[key.strip()] = val.strip()

    def need(key):
        if key not in fields:
            raise ParseError(text, len(text), f"a '{key}=' field for {family}")
        return fields.pop(key)

    if family == "verma":
        lam = parse_rational(need("lambda"))
        charge = parse_rational(need("c"))
        spec = verma_top(lam, charge)
    elif family == "b0":
        lam = parse_rational(need("lambda"))
        charge = parse_rational(need("c"))
        spec = b0_module(lam, charge)
    elif family == "b1":
        mu = parse_rational(need("mu"))
        charge = parse_rational(need("c"))
        spec = b1_module(shift_family(mu), charge)
    elif family == "whittaker":
        t = int(need("t"))
        charge = parse_rational(need("c"))
        phi_text = need("phi") if "phi" in fields else ""
        values = {}
        for piece in phi_text.split(";"):
            piece = piece.strip()
            if not piece:
                continue
            m = re.fullmatch(r"L(-?\d+)=(-?\d+(?:/\d+)?)", piece)
            if not m:
                raise ParseError(text, text.find(piece), "phi entries of the form L<k>=<q>")
            values[int(m.group(1))] = Fraction(m.group(2))
        data = WhittakerData.make(t, values, charge)
        spec = whittaker_b_module(data)
    else:
        raise ParseError(text, 0, "a family among verma, whittaker, b0, b1")
    if fields:
        raise RamondError(f"unknown module fields: {sorted(fields)}")
    return spec
