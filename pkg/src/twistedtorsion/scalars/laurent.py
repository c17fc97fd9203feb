"""Multivariate Laurent polynomials over a cyclotomic field."""
from fractions import Fraction

from ..errors import NotDivisibleError
from .cyclotomic import CycloNum

__all__ = ["LaurentPoly"]


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub_exp(a, b):
    return tuple(x - y for x, y in zip(a, b))


class LaurentPoly:
    """Element of K[t1^+-1, ..., tn^+-1] with K = Q(zeta_N).

    ``terms`` maps exponent tuples to nonzero :class:`CycloNum`.  Instances
    are treated as immutable; every operation returns a new polynomial.
    """

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field, nvars, terms=None):
        self.field = field
        self.nvars = nvars
        self.terms = {} if terms is None else terms

    # -- constructors ---------------------------------------------------------
    @classmethod
    def from_terms(cls, field, nvars, items):
        """Build from an iterable of (exponent, coefficient) pairs, summing repeats."""
        terms = {}
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            c = field(c)
            if exp in terms:
                c = terms[exp] + c
            if c.is_zero():
                terms.pop(exp, None)
            else:
                terms[exp] = c
        return cls(field, nvars, terms)

    @classmethod
    def constant(cls, field, nvars, c):
        c = field(c)
        return cls(field, nvars, {} if c.is_zero() else {(0,) * nvars: c})

    @classmethod
    def monomial(cls, field, nvars, exp, c=1):
        c = field(c)
        return cls(field, nvars, {} if c.is_zero() else {tuple(exp): c})

    @classmethod
    def variable(cls, field, nvars, i):
        exp = [0] * nvars
        exp[i] = 1
        return cls(field, nvars, {tuple(exp): field.one})

    def zero(self):
        return LaurentPoly(self.field, self.nvars, {})

    def one(self):
        return LaurentPoly(self.field, self.nvars, {(0,) * self.nvars: self.field.one})

    # -- basic queries --------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and (0,) * self.nvars in self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def constant_coefficient(self):
        return self.terms.get((0,) * self.nvars, self.field.zero)

    def leading_term(self):
        """(exponent, coefficient) of the lexicographically largest exponent."""
        e = max(self.terms)
        return e, self.terms[e]

    def trailing_term(self):
        e = min(self.terms)
        return e, self.terms[e]

    def min_exponents(self):
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def max_exponents(self):
        return tuple(max(e[i] for e in self.terms) for i in range(self.nvars))

    def support(self):
        return sorted(self.terms)

    def is_polynomial(self):
        return all(x >= 0 for e in self.terms for x in e)

    def is_rational(self):
        return all(c.is_rational() for c in self.terms.values())

    # -- arithmetic -------------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction, CycloNum)):
            return LaurentPoly.constant(self.field, self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            old = terms.get(e)
            if old is None:
                terms[e] = c
            else:
                s = old + c
                if s.is_zero():
                    del terms[e]
                else:
                    terms[e] = s
        return LaurentPoly(self.field, self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.field, self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return self.zero()
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly(self.field, self.nvars,
                               {_add_exp(ea, eb): ca * cb for ea, ca in a.items()})
        terms = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = _add_exp(ea, eb)
                p = ca * cb
                old = terms.get(e)
                terms[e] = p if old is None else old + p
        return LaurentPoly(self.field, self.nvars,
                           {e: c for e, c in terms.items() if not c.is_zero()})

    __rmul__ = __mul__

    def scale(self, c):
        c = self.field(c)
        if c.is_zero():
            return self.zero()
        if c.is_one():
            return self
        return LaurentPoly(self.field, self.nvars, {e: v * c for e, v in self.terms.items()})

    def shift(self, exp):
        """Multiply by the monomial t^exp."""
        exp = tuple(exp)
        if not any(exp):
            return self
        return LaurentPoly(self.field, self.nvars,
                           {_add_exp(e, exp): c for e, c in self.terms.items()})

    def __pow__(self, k):
        if k < 0:
            if not self.is_monomial():
                raise NotDivisibleError("negative power of a non-monomial Laurent polynomial")
            (e, c), = self.terms.items()
            return LaurentPoly(self.field, self.nvars,
                               {tuple(k * x for x in e): c.inverse() ** (-k)})
        result, base = self.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divexact(self, other):
        """Exact quotient self / other in the Laurent ring.

        Raises NotDivisibleError when other does not divide self.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self.zero()
        if other.is_monomial():
            (e, c), = other.terms.items()
            inv = c.inverse()
            neg = tuple(-x for x in e)
            return LaurentPoly(self.field, self.nvars,
                               {_add_exp(ea, neg): ca * inv for ea, ca in self.terms.items()})
        # per-variable degrees add under multiplication, which bounds the quotient
        lo = _sub_exp(self.min_exponents(), other.min_exponents())
        hi = _sub_exp(self.max_exponents(), other.max_exponents())
        if any(l > h for l, h in zip(lo, hi)):
            raise NotDivisibleError("degree bounds rule out an exact quotient")
        lead_e, lead_c = other.leading_term()
        inv = lead_c.inverse()
        rest = [(e, c) for e, c in other.terms.items() if e != lead_e]
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = max(rem)
            qe = _sub_exp(e, lead_e)
            if any(x < l or x > h for x, l, h in zip(qe, lo, hi)):
                raise NotDivisibleError("remainder escapes quotient degree bounds")
            qc = rem.pop(e) * inv
            quot[qe] = qc
            for eb, cb in rest:
                t = _add_exp(qe, eb)
                v = rem.get(t)
                p = qc * cb
                if v is None:
                    rem[t] = -p
                else:
                    v = v - p
                    if v.is_zero():
                        del rem[t]
                    else:
                        rem[t] = v
        return LaurentPoly(self.field, self.nvars, quot)

    def divides(self, other):
        """True if self divides other."""
        try:
            other.divexact(self)
        except NotDivisibleError:
            return False
        return True

    # -- comparison ---------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, CycloNum)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- substitutions & maps ---------------------------------------------------
    def substitute_scaling(self, scalars):
        """Apply t_i -> scalars[i] * t_i."""
        out = {}
        for e, c in self.terms.items():
            f = c
            for s, k in zip(scalars, e):
                if k:
                    f = f * (s ** k)
            out[e] = f
        return LaurentPoly(self.field, self.nvars, out)

    def substitute_roots(self, zeta_exponents):
        """Apply t_i -> zeta_N^(k_i) * t_i, with k_i given as integers mod N."""
        field = self.field
        out = {}
        for e, c in self.terms.items():
            k = sum(a * b for a, b in zip(zeta_exponents, e))
            out[e] = c * field.zeta_power(k) if k % field.conductor else c
        return LaurentPoly(field, self.nvars, out)

    def evaluate(self, values):
        """Evaluate at a point of (K^*)^n; returns a CycloNum."""
        total = self.field.zero
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term = term * (self.field(v) ** k)
            total = total + term
        return total

    def map_coefficients(self, f):
        out = {}
        for e, c in self.terms.items():
            v = f(c)
            if not v.is_zero():
                out[e] = v
        return LaurentPoly(self.field, self.nvars, out)

    def change_field(self, field):
        return LaurentPoly(field, self.nvars, {e: field(c) for e, c in self.terms.items()})

    def normalize_shift(self):
        """Return (poly, exp) with poly = self * t^-exp having all minimum exponents 0."""
        if not self.terms:
            return self, (0,) * self.nvars
        m = self.min_exponents()
        return self.shift(tuple(-x for x in m)), m

    # -- rendering ------------------------------------------------------------------
    def __str__(self):
        from .parsing import render_laurent
        return render_laurent(self)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __reduce__(self):
        return (LaurentPoly, (self.field, self.nvars, self.terms))
