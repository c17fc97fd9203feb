"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(d-1) with d = phi(N)
and z = exp(2*pi*i/N).  Coefficients are :class:`fractions.Fraction`.
"""
from fractions import Fraction
from functools import lru_cache
from math import gcd

from ..errors import ConductorMismatchError

__all__ = [
    "CycloField",
    "CycloNum",
    "cyclotomic_field",
    "cyclotomic_polynomial",
    "cyclo_embed_root_of_unity",
    "euler_phi",
]


def euler_phi(n):
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_exact_div_int(num, den):
    """Divide integer polynomials (low degree first); den must be monic."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact cyclotomic division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n < 1:
        raise ValueError("cyclotomic polynomial needs n >= 1")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_exact_div_int(poly, cyclotomic_polynomial(d))
    return tuple(poly)


# -- helpers on dense Q[x] polynomials (lists, low degree first) ------------

def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _qpoly_divmod(a, b):
    a = list(a)
    inv = 1 / Fraction(b[-1])
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv
        q[i] = c
        if c:
            for j, d in enumerate(b):
                a[i + j] -= c * d
    return _trim(q), _trim(a[: len(b) - 1])


def _qpoly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim([Fraction(x) for x in out])


class CycloField:
    """The field Q(zeta_N).  Obtain instances through :func:`cyclotomic_field`."""

    __slots__ = ("conductor", "degree", "minimal_polynomial", "_reduction", "_zeta_powers",
                 "zero", "one")

    def __init__(self, conductor):
        if conductor < 1:
            raise ValueError("conductor must be a positive integer")
        self.conductor = conductor
        self.minimal_polynomial = cyclotomic_polynomial(conductor)
        self.degree = len(self.minimal_polynomial) - 1
        d = self.degree
        # rows: z^(d+j) reduced mod the minimal polynomial, up to z^(max(2d-2, N-1))
        rows = []
        cur = [-c for c in self.minimal_polynomial[:-1]]
        for _ in range(max(d - 1, conductor - d)):
            rows.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [c - top * m for c, m in zip(cur, self.minimal_polynomial)]
        self._reduction = rows
        self._zeta_powers = {}
        self.zero = CycloNum(self, (Fraction(0),) * d)
        self.one = CycloNum(self, (Fraction(1),) + (Fraction(0),) * (d - 1))

    def __repr__(self):
        return f"CycloField({self.conductor})"

    def __reduce__(self):
        return (cyclotomic_field, (self.conductor,))

    def __call__(self, value):
        """Coerce an int, Fraction, str or CycloNum into this field."""
        if isinstance(value, CycloNum):
            if value.field is not self:
                if value.field.conductor == self.conductor:
                    return CycloNum(self, value.coeffs)
                return self.embed(value)
            return value
        if isinstance(value, str):
            from .parsing import parse_cyclo
            return parse_cyclo(value, self)
        v = Fraction(value)
        return CycloNum(self, (v,) + (Fraction(0),) * (self.degree - 1))

    def _reduce(self, poly):
        d = self.degree
        poly = list(poly) + [0] * max(0, d - len(poly))
        low = poly[:d]
        for j in range(len(poly) - 1, d - 1, -1):
            c = poly[j]
            if c:
                row = self._reduction[j - d]
                for i in range(d):
                    if row[i]:
                        low[i] += c * row[i]
        return tuple(Fraction(c) for c in low)

    def from_poly(self, poly):
        """Element represented by a polynomial in z (low degree first)."""
        if len(poly) <= self.degree:
            return CycloNum(self, tuple(Fraction(c) for c in poly)
                            + (Fraction(0),) * (self.degree - len(poly)))
        # z^N = 1 lets us fold high powers cheaply before the generic reduction
        N = self.conductor
        if len(poly) > N:
            folded = [0] * N
            for i, c in enumerate(poly):
                folded[i % N] += c
            poly = folded
        return CycloNum(self, self._reduce(poly))

    def zeta_power(self, k):
        """zeta_N^k for any integer k."""
        k %= self.conductor
        cached = self._zeta_powers.get(k)
        if cached is None:
            cached = self.from_poly([0] * k + [1])
            self._zeta_powers[k] = cached
        return cached

    @property
    def zeta(self):
        return self.zeta_power(1)

    def root_of_unity(self, q, k=1):
        """exp(2 pi i k / q) as an element of this field."""
        return cyclo_embed_root_of_unity(q, k, self)

    def embed(self, x):
        """Embed an element of a subfield Q(zeta_M), M | N."""
        M = x.field.conductor
        if self.conductor % M:
            raise ConductorMismatchError(M, self.conductor)
        step = self.conductor // M
        poly = [0] * (step * (len(x.coeffs) - 1) + 1)
        for i, c in enumerate(x.coeffs):
            poly[i * step] = c
        return self.from_poly(poly)

    def root_of_unity_exponent(self, x):
        """Return b with x == zeta_N^b, or None if x is not a power of zeta_N."""
        for b in range(self.conductor):
            if self.zeta_power(b) == x:
                return b
        return None


@lru_cache(maxsize=None)
def cyclotomic_field(conductor):
    return CycloField(int(conductor))


class CycloNum:
    """An element of Q(zeta_N); immutable."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    # -- coercion -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CycloNum):
            if other.field is self.field:
                return other
            if other.field.conductor == self.field.conductor:
                return CycloNum(self.field, other.coeffs)
            raise ConductorMismatchError(other.field.conductor, self.field.conductor)
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 1:
                return self
            return CycloNum(self.field, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) == 1:
            return CycloNum(self.field, (a[0] * b[0],))
        prod = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycloNum(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if len(self.coeffs) == 1:
            return CycloNum(self.field, (1 / self.coeffs[0],))
        # extended Euclid: s*a + t*m = 1 in Q[x]
        m = [Fraction(c) for c in self.field.minimal_polynomial]
        a = _trim(list(self.coeffs))
        r0, r1 = m, a
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
        # r0 is a nonzero constant; s0*a = r0 mod m
        inv_c = 1 / r0[0]
        return self.field.from_poly([c * inv_c for c in s0])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.field, tuple(a / other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- predicates & comparisons ------------------------------------------
    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_one(self):
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational(self):
        """The element as a Fraction; raises ValueError if it is not rational."""
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return self.field.conductor == other.field.conductor and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs[0]) if self.is_rational() else hash(self.coeffs)
        return self._hash

    # -- automorphisms ------------------------------------------------------
    def galois(self, j):
        """Apply the automorphism zeta -> zeta^j (gcd(j, N) = 1)."""
        N = self.field.conductor
        if gcd(j, N) != 1:
            raise ValueError(f"zeta -> zeta^{j} is not an automorphism of Q(zeta_{N})")
        out = self.field.zero
        for i, c in enumerate(self.coeffs):
            if c:
                out = out + self.field.zeta_power(i * j) * c
        return out

    def conjugate(self):
        return self.galois(self.field.conductor - 1)

    def norm(self):
        """Absolute norm down to Q: product over all Galois conjugates."""
        N = self.field.conductor
        out = self.field.one
        for j in range(1, N + 1):
            if gcd(j, N) == 1:
                out = out * self.galois(j)
        return out.rational()

    # -- rendering ----------------------------------------------------------
    def __str__(self):
        from .parsing import render_cyclo
        return render_cyclo(self)

    def __repr__(self):
        return f"CycloNum({self}, N={self.field.conductor})"

    def __reduce__(self):
        return (CycloNum, (self.field, self.coeffs))


def cyclo_embed_root_of_unity(q, k, field):
    """exp(2 pi i k / q) in ``field``; requires q | N."""
    N = field.conductor
    if q < 1 or N % q:
        raise ConductorMismatchError(q, N)
    return field.zeta_power(k * (N // q))
