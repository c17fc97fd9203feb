"""Abelian maps phi, matrix representations rho, characters of G and their tensors."""
from dataclasses import dataclass
from typing import Tuple

from .errors import ValidationError
from .groups.finab import EpiToG, FinAbGroup
from .groups.words import letter_generator
from .scalars.linalg import field_det, lattice_index

__all__ = [
    "AbelMap",
    "MatRep",
    "Character",
    "TensorRep",
    "characters",
    "pullback_character",
    "twist",
    "pullback",
    "tensor_rep",
    "trivial_rep",
]


# -- small dense matrices over Q(zeta_N) -----------------------------------------------

def kmat_identity(field, m):
    return tuple(tuple(field.one if i == j else field.zero for j in range(m)) for i in range(m))


def kmat_mul(a, b):
    m = len(a)
    if m == 1:
        return ((a[0][0] * b[0][0],),)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(m) if a[i][k] and b[k][j]), a[0][0].field.zero)
              for j in range(m))
        for i in range(m)
    )


def kmat_inverse(a):
    m = len(a)
    field = a[0][0].field
    if m == 1:
        return ((a[0][0].inverse(),),)
    aug = [list(row) + [field.one if i == j else field.zero for j in range(m)] for i, row in enumerate(a)]
    for c in range(m):
        p = next((i for i in range(c, m) if aug[i][c]), None)
        if p is None:
            raise ValidationError("representation matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        inv = aug[c][c].inverse()
        aug[c] = [x * inv for x in aug[c]]
        for i in range(m):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(row[m:]) for row in aug)


def kmat_scale(a, c):
    return tuple(tuple(x * c for x in row) for row in a)


def kmat_det(a):
    return field_det([list(r) for r in a], one=a[0][0].field.one) if a else None


def kmat_is_identity(a):
    return all((x.is_one() if i == j else x.is_zero()) for i, row in enumerate(a) for j, x in enumerate(row))


# -- phi ----------------------------------------------------------------------------------

@dataclass(frozen=True)
class AbelMap:
    """Homomorphism pi_1 -> Z^n given by generator images (exponent vectors)."""

    images: Tuple[Tuple[int, ...], ...]
    nvars: int
    surjective: bool = True

    @classmethod
    def from_matrix(cls, phi_matrix):
        n = len(phi_matrix)
        k = len(phi_matrix[0]) if n else 0
        return cls(tuple(tuple(phi_matrix[i][j] for i in range(n)) for j in range(k)), n)

    def matrix(self):
        return [[img[i] for img in self.images] for i in range(self.nvars)]

    def word_image(self, word):
        v = [0] * self.nvars
        for x in word:
            j, s = letter_generator(x)
            for i, a in enumerate(self.images[j]):
                v[i] += s * a
        return tuple(v)

    def lattice_index(self):
        """Index of the image in Z^n (0 when the image has lower rank)."""
        return lattice_index([img for img in self.images if any(img)], self.nvars)

    def validate(self, p, require_surjective=True):
        if len(self.images) != p.num_generators:
            raise ValidationError("phi must give one image per generator")
        if self.nvars < 1:
            raise ValidationError("phi needs at least one variable (n >= 1)")
        for r in p.relators:
            if any(self.word_image(r)):
                raise ValidationError("phi does not kill every relator")
        if require_surjective and self.lattice_index() != 1:
            raise ValidationError("phi is not surjective onto Z^n")
        return self


# -- rho ----------------------------------------------------------------------------------

@dataclass(frozen=True)
class MatRep:
    """Representation generator -> GL_m(Q(zeta_N))."""

    images: Tuple[Tuple[Tuple[object, ...], ...], ...]
    dim: int

    def word_image(self, word):
        field = self.images[0][0][0].field
        out = kmat_identity(field, self.dim)
        invs = {}
        for x in word:
            j, s = letter_generator(x)
            if s > 0:
                out = kmat_mul(out, self.images[j])
            else:
                if j not in invs:
                    invs[j] = kmat_inverse(self.images[j])
                out = kmat_mul(out, invs[j])
        return out

    @property
    def field(self):
        return self.images[0][0][0].field

    def validate(self, p, check_relators=True):
        if len(self.images) != p.num_generators:
            raise ValidationError("rho must give one matrix per generator")
        for img in self.images:
            if len(img) != self.dim or any(len(row) != self.dim for row in img):
                raise ValidationError(f"rho images must be {self.dim} x {self.dim}")
            det = kmat_det(img)
            if det.is_zero():
                raise ValidationError("rho image is singular")
            if self.dim >= 2 and not det.is_one():
                raise ValidationError(f"rho image has determinant {det}, expected 1")
        if check_relators:
            for r in p.relators:
                if not kmat_is_identity(self.word_image(r)):
                    raise ValidationError("rho does not satisfy every relator")
        return self

    def direct_sum(self, other):
        m1, m2 = self.dim, other.dim
        zero = self.field.zero
        imgs = []
        for a, b in zip(self.images, other.images):
            rows = [tuple(a[i]) + (zero,) * m2 for i in range(m1)]
            rows += [(zero,) * m1 + tuple(b[i]) for i in range(m2)]
            imgs.append(tuple(rows))
        return MatRep(tuple(imgs), m1 + m2)

    def conjugate(self, P):
        """The representation g -> P rho(g) P^-1."""
        Pinv = kmat_inverse(P)
        return MatRep(tuple(kmat_mul(kmat_mul(P, a), Pinv) for a in self.images), self.dim)


def trivial_rep(field, num_generators, dim=1):
    return MatRep(tuple(kmat_identity(field, dim) for _ in range(num_generators)), dim)


# -- characters -------------------------------------------------------------------------

@dataclass(frozen=True)
class Character:
    """xi(e_i) = exp(2 pi i k_i / q_i)."""

    group: FinAbGroup
    values: Tuple[int, ...]

    def exponent(self, g, conductor):
        """b with xi(g) = zeta_N^b."""
        return sum(k * x * (conductor // q)
                   for k, x, q in zip(self.values, g, self.group.invariant_factors)) % conductor

    def __call__(self, g, field):
        return field.zeta_power(self.exponent(g, field.conductor))

    def is_trivial(self):
        return not any(self.values)

    def __str__(self):
        return "(" + ", ".join(str(k) for k in self.values) + ")"


def characters(G: FinAbGroup):
    """All |G| characters, in lexicographic order of (k_1, ..., k_r)."""
    return [Character(G, k) for k in G.elements()]


def pullback_character(xi: Character, pi_bar: EpiToG, field):
    """The values xi(pi_bar(t_i)) as CycloNum roots of unity."""
    N = field.conductor
    if N % max(xi.group.exponent, 1):
        from .errors import ConductorMismatchError
        raise ConductorMismatchError(xi.group.exponent, N)
    return tuple(field.zeta_power(xi.exponent(pi_bar.column(i), N)) for i in range(pi_bar.nvars))


# -- tensor representation ----------------------------------------------------------------

class TensorRep:
    """Phi(gamma) = twist(gamma) * t^phi(gamma) * rho(gamma), acting on the left."""

    def __init__(self, field, exps, twists, mats):
        self.field = field
        self.exps = tuple(tuple(e) for e in exps)
        self.twists = tuple(twists)
        self.mats = tuple(mats)
        self.nvars = len(self.exps[0]) if self.exps else 0
        self.dim = len(self.mats[0]) if self.mats else 1
        self._combined = [kmat_scale(m, c) if not c.is_one() else m
                          for m, c in zip(self.mats, self.twists)]
        self._inverses = [None] * len(self._combined)
        self._neg_exps = [tuple(-x for x in e) for e in self.exps]

    @property
    def num_generators(self):
        return len(self.mats)

    def generator_matrix(self, j, sign=1):
        if sign > 0:
            return self._combined[j]
        if self._inverses[j] is None:
            self._inverses[j] = kmat_inverse(self._combined[j])
        return self._inverses[j]

    def identity_image(self):
        return (0,) * self.nvars, kmat_identity(self.field, self.dim)

    def multiply(self, exp, mat, x):
        """(exp, mat) * Phi(x) for a single letter x."""
        j, s = letter_generator(x)
        e = self.exps[j] if s > 0 else self._neg_exps[j]
        return tuple(a + b for a, b in zip(exp, e)), kmat_mul(mat, self.generator_matrix(j, s))

    def word_image(self, word):
        exp, mat = self.identity_image()
        for x in word:
            exp, mat = self.multiply(exp, mat, x)
        return exp, mat

    def with_twists(self, twists):
        return TensorRep(self.field, self.exps, twists, self.mats)

    def __repr__(self):
        return f"TensorRep(n={self.nvars}, m={self.dim}, generators={self.num_generators})"


def tensor_rep(phi: AbelMap, rho: MatRep, field=None):
    field = field or rho.field
    mats = [tuple(tuple(field(x) for x in row) for row in m) for m in rho.images]
    return TensorRep(field, phi.images, [field.one] * len(phi.images), mats)


def twist(base: TensorRep, xi_bar):
    """Tensor with a character: multiply each generator's scalar by xi_bar(t^phi(x))."""
    twists = []
    for e, c in zip(base.exps, base.twists):
        s = c
        for v, k in zip(xi_bar, e):
            if k:
                s = s * (v ** k)
        twists.append(s)
    return base.with_twists(twists)


def pullback(sub, phi: AbelMap, rho: MatRep):
    """Pull phi and rho back along the subgroup inclusion."""
    phi_hat = AbelMap(tuple(phi.word_image(w) for w in sub.inclusion), phi.nvars, surjective=False)
    rho_hat = MatRep(tuple(rho.word_image(w) for w in sub.inclusion), rho.dim)
    try:
        rho_hat.validate(sub.presentation)
        phi_hat.validate(sub.presentation, require_surjective=False)
    except ValidationError as exc:
        raise ValidationError(f"internal consistency: pulled-back data fails on the cover ({exc})") from exc
    return phi_hat, rho_hat
