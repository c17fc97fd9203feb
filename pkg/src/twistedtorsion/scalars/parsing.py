"""Canonical text rendering and parsing for cyclotomic numbers and Laurent polynomials.

Rendering contract: terms are sorted by exponent vector in decreasing
lexicographic order, coefficients are polynomials in ``z`` (= zeta_N) with
rational coefficients, e.g. ``(1/2*z^2 - 1)*t1^2*t2^-1``.  With one variable
the variable is written ``t``; otherwise ``t1``, ..., ``tn``.

The parser accepts everything the renderer produces plus ``zeta(q)`` (or
``E(q)``) for exp(2 pi i / q), integers, rationals ``a/b`` and parentheses.
"""
import re
from fractions import Fraction
from math import lcm

from ..errors import ConductorMismatchError, ParseError
from .cyclotomic import cyclo_embed_root_of_unity
from .laurent import LaurentPoly

__all__ = [
    "render_cyclo",
    "render_laurent",
    "variable_names",
    "parse_cyclo",
    "parse_laurent",
    "required_conductor",
]

_ROOT_RE = re.compile(r"\b(?:zeta|E)\s*\(\s*(\d+)\s*\)")
_BARE_Z_RE = re.compile(r"\bz\b")


def _fmt_rational(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _join(bodies):
    if not bodies:
        return "0"
    out = bodies[0]
    for b in bodies[1:]:
        out += " - " + b[1:] if b.startswith("-") else " + " + b
    return out


def render_cyclo(x):
    bodies = []
    for k in range(len(x.coeffs) - 1, -1, -1):
        c = x.coeffs[k]
        if not c:
            continue
        if k == 0:
            bodies.append(_fmt_rational(c))
            continue
        mono = "z" if k == 1 else f"z^{k}"
        if c == 1:
            bodies.append(mono)
        elif c == -1:
            bodies.append("-" + mono)
        else:
            bodies.append(f"{_fmt_rational(c)}*{mono}")
    return _join(bodies)


def variable_names(nvars):
    if nvars == 1:
        return ["t"]
    return [f"t{i + 1}" for i in range(nvars)]


def _render_monomial(exp, names):
    parts = []
    for name, k in zip(names, exp):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def render_laurent(p):
    names = variable_names(p.nvars)
    several = len(p.terms) > 1
    bodies = []
    for exp in sorted(p.terms, reverse=True):
        c = p.terms[exp]
        mono = _render_monomial(exp, names)
        s = render_cyclo(c)
        multi = sum(1 for v in c.coeffs if v) > 1
        if not mono:
            bodies.append(f"({s})" if multi and several else s)
        elif c == 1:
            bodies.append(mono)
        elif c == -1:
            bodies.append("-" + mono)
        elif multi:
            bodies.append(f"({s})*{mono}")
        else:
            bodies.append(f"{s}*{mono}")
    return _join(bodies)


def required_conductor(text):
    """(lcm of the orders q in ``zeta(q)`` atoms, whether a bare ``z`` occurs)."""
    orders = [int(q) for q in _ROOT_RE.findall(text)]
    return lcm(1, *orders), bool(_BARE_Z_RE.search(text))


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class _Parser:
    def __init__(self, text, field, nvars):
        self.text = text
        self.field = field
        self.nvars = nvars
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None or m.end() == pos:
                break
            if m.group(1) is not None:
                self.tokens.append(("num", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.tokens.append(("id", m.group(2), m.start(2)))
            elif m.group(3) is not None:
                self.tokens.append(("op", m.group(3), m.start(3)))
            pos = m.end()
        self.i = 0
        names = variable_names(nvars)
        self.variables = {name: i for i, name in enumerate(names)}
        if nvars == 1:
            self.variables["t1"] = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "token"
            raise ParseError(f"expected {want!r} in {self.text!r}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ParseError(f"empty expression {self.text!r}", 0)
        value = self.expr()
        if self.peek()[0] is not None:
            raise ParseError(f"unexpected {self.peek()[1]!r} in {self.text!r}", self.peek()[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[1] in ("*", "/"):
            _, op, pos = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ParseError(f"can only divide by a nonzero constant in {self.text!r}", pos)
                value = value.scale(rhs.constant_coefficient().inverse())
        return value

    def unary(self):
        if self.peek()[1] == "-":
            self.take()
            return -self.unary()
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            sign = 1
            if self.peek()[1] == "-":
                self.take()
                sign = -1
            elif self.peek()[1] == "(":
                self.take()
                if self.peek()[1] == "-":
                    self.take()
                    sign = -1
                k = int(self.take("num")[1])
                self.take("op", ")")
                return base ** (sign * k)
            k = int(self.take("num")[1])
            if sign < 0 and not base.is_monomial():
                raise ParseError(f"negative power of a non-monomial in {self.text!r}",
                                 self.tokens[self.i - 1][2])
            return base ** (sign * k)
        return base

    def atom(self):
        kind, value, pos = self.peek()
        F, n = self.field, self.nvars
        if kind == "num":
            self.take()
            return LaurentPoly.constant(F, n, int(value))
        if kind == "id":
            self.take()
            if value == "z":
                return LaurentPoly.constant(F, n, F.zeta)
            if value in ("zeta", "E"):
                self.take("op", "(")
                q = int(self.take("num")[1])
                self.take("op", ")")
                try:
                    root = cyclo_embed_root_of_unity(q, 1, F)
                except ConductorMismatchError as exc:
                    raise ParseError(str(exc), pos) from exc
                return LaurentPoly.constant(F, n, root)
            if value in self.variables:
                return LaurentPoly.variable(F, n, self.variables[value])
            raise ParseError(f"unknown symbol {value!r} in {self.text!r}", pos)
        if value == "(":
            self.take()
            inner = self.expr()
            self.take("op", ")")
            return inner
        raise ParseError(f"unexpected {value!r} in {self.text!r}", pos)


def parse_laurent(text, field, nvars):
    """Parse a Laurent polynomial in t (n = 1) or t1..tn over ``field``."""
    return _Parser(str(text), field, nvars).parse()


def parse_cyclo(text, field):
    """Parse a cyclotomic number literal such as ``-1``, ``1/2*z^2 - 1`` or ``zeta(3)``."""
    poly = _Parser(str(text), field, 0).parse()
    return poly.constant_coefficient()
