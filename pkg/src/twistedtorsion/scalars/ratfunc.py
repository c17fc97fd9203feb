"""Rational functions num/den of Laurent polynomials.

Fractions are not kept fully reduced: multivariate GCD is not implemented.
Monomial content is always normalized away, one-variable fractions are
reduced by Euclid's algorithm, and in several variables a denominator that
divides the numerator (or vice versa) is cancelled.  Equality is decided by
cross-multiplication, so it never depends on how far a fraction was reduced.
"""
from fractions import Fraction

from ..errors import NotDivisibleError
from .cyclotomic import CycloNum
from .laurent import LaurentPoly

__all__ = ["RatFunc", "ratfunc_equal", "univariate_gcd"]


def _univariate_rem(a, b):
    # a, b: one-variable ordinary polynomials; b nonzero
    (db,), lcb = b.leading_term()
    inv = lcb.inverse()
    while a.terms:
        (da,), lca = a.leading_term()
        if da < db:
            break
        a = a - b.shift((da - db,)).scale(lca * inv)
    return a


def univariate_gcd(a, b):
    """Monic gcd of two one-variable Laurent polynomials (as an ordinary polynomial)."""
    if a.nvars != 1:
        raise ValueError("univariate_gcd needs one variable")
    a, _ = a.normalize_shift()
    b, _ = b.normalize_shift()
    while b.terms:
        a, b = b, _univariate_rem(a, b)
        b, _ = b.normalize_shift()
    if not a.terms:
        return a
    return a.scale(a.leading_term()[1].inverse())


class RatFunc:
    """A quotient of Laurent polynomials with a nonzero denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, normalize=True):
        if den is None:
            den = num.one()
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.nvars != den.nvars:
            raise ValueError("numerator and denominator have different variable counts")
        self.num = num
        self.den = den
        if normalize:
            self._normalize()

    @property
    def field(self):
        return self.num.field

    @property
    def nvars(self):
        return self.num.nvars

    def _normalize(self):
        num, den = self.num, self.den
        if num.is_zero():
            self.num, self.den = num, num.one()
            return
        den, shift = den.normalize_shift()
        num = num.shift(tuple(-x for x in shift))
        if den.is_monomial():
            num = num.divexact(den)
            den = den.one()
        elif num.nvars == 1:
            g = univariate_gcd(num, den)
            if not g.is_constant():
                num = num.divexact(g)
                den = den.divexact(g)
                den, shift = den.normalize_shift()
                num = num.shift(tuple(-x for x in shift))
        else:
            try:
                num = num.divexact(den)
                den = den.one()
            except NotDivisibleError:
                try:
                    den = den.divexact(num)
                    num = num.one()
                    den, shift = den.normalize_shift()
                    num = num.shift(tuple(-x for x in shift))
                except NotDivisibleError:
                    pass
        c = den.trailing_term()[1]
        if not c.is_one():
            inv = c.inverse()
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    # -- constructors -----------------------------------------------------------
    @classmethod
    def constant(cls, field, nvars, c):
        return cls(LaurentPoly.constant(field, nvars, c))

    def zero(self):
        return RatFunc(self.num.zero(), self.num.one(), normalize=False)

    def one(self):
        return RatFunc(self.num.one(), self.num.one(), normalize=False)

    # -- arithmetic ---------------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, LaurentPoly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction, CycloNum)):
            return RatFunc(LaurentPoly.constant(self.field, self.nvars, other), normalize=False)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_laurent(self):
        return self.den.is_monomial()

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ratfunc_equal(self, other)

    def __hash__(self):
        # equal fractions may be stored differently; hash only invariant data
        return hash(self.nvars)

    def substitute_roots(self, zeta_exponents):
        return RatFunc(self.num.substitute_roots(zeta_exponents),
                       self.den.substitute_roots(zeta_exponents))

    def __str__(self):
        n, d = str(self.num), str(self.den)
        if self.den == self.den.one():
            return n
        if len(self.num.terms) > 1:
            n = f"({n})"
        if len(self.den.terms) > 1 or not self.den.is_constant():
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatFunc({self})"


def ratfunc_equal(f, g):
    """Decide f == g by cross-multiplication."""
    if f.nvars != g.nvars:
        raise ValueError("rational functions in different numbers of variables")
    return f.num * g.den == g.num * f.den
