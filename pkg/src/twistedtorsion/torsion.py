"""Torsion engines and comparison up to units.

``chain_torsion`` is the sign-determined torsion of a based (and, when
needed, homology-based) chain complex over any exact field.  ``wada_torsion``
computes the polynomial torsion of a deficiency-one presentation complex
from its twisted Fox Jacobian.
"""
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd, lcm
from typing import List, Optional, Sequence, Tuple

from .errors import NotAcyclicError, ValidationError
from .fox import fox_jacobian
from .scalars.cyclotomic import cyclotomic_field
from .scalars.laurent import LaurentPoly
from .scalars.linalg import det_fraction_free, field_det, field_rank, lattice_contains, pivot_columns
from .scalars.parsing import render_laurent
from .scalars.ratfunc import RatFunc

__all__ = [
    "BasedChainComplex",
    "chain_torsion",
    "UnitGroup",
    "Unit",
    "TorsionValue",
    "wada_torsion",
    "equal_up_to_unit",
    "presentation_complex",
]


# -- chain complexes -----------------------------------------------------------------

@dataclass
class BasedChainComplex:
    """0 -> C_N -> ... -> C_0 -> 0 with chosen bases.

    ``dims[i]`` is dim C_i.  ``boundaries[i - 1]`` is the matrix of
    d_i: C_i -> C_(i-1) as a list of ``dims[i-1]`` rows and ``dims[i]``
    columns (column j is the image of the j-th basis vector of C_i).
    ``homology[i]`` lists cycles of C_i (coordinate vectors) whose classes
    form the chosen basis of H_i; omit it for acyclic complexes.
    """

    dims: Sequence[int]
    boundaries: Sequence[Sequence[Sequence[object]]]
    homology: Optional[Sequence[Sequence[Sequence[object]]]] = None
    one: object = Fraction(1)

    def __post_init__(self):
        if len(self.boundaries) != max(len(self.dims) - 1, 0):
            raise ValidationError("need one boundary matrix per positive degree")
        for i, d in enumerate(self.boundaries, start=1):
            if len(d) != self.dims[i - 1] or any(len(row) != self.dims[i] for row in d):
                raise ValidationError(f"d_{i} must be {self.dims[i - 1]} x {self.dims[i]}")

    @property
    def top(self):
        return len(self.dims) - 1

    def column(self, i, j):
        """Image d_i(e_j) as a vector of C_(i-1)."""
        return [row[j] for row in self.boundaries[i - 1]]

    def rank(self, i):
        if i < 1 or i > self.top or not self.dims[i] or not self.dims[i - 1]:
            return 0
        return field_rank(self.boundaries[i - 1])

    def check_complex(self):
        zero = self.one * 0
        for i in range(2, self.top + 1):
            a, b = self.boundaries[i - 2], self.boundaries[i - 1]
            for r in range(self.dims[i - 2]):
                for c in range(self.dims[i]):
                    s = zero
                    for k in range(self.dims[i - 1]):
                        s = s + a[r][k] * b[k][c]
                    if s:
                        raise ValidationError(f"d_{i - 1} o d_{i} != 0")


def _betti_and_pivots(c):
    ranks = [c.rank(i) for i in range(c.top + 2)]
    betti = [c.dims[i] - ranks[i] - ranks[i + 1] for i in range(c.top + 1)]
    pivots = [[]] + [pivot_columns(c.boundaries[i - 1]) if c.rank(i) else [] for i in range(1, c.top + 1)]
    return betti, pivots


def sign_exponent(dims, betti):
    """|C_*| = sum_k alpha_k beta_k, alpha/beta the partial sums of dims / Betti numbers."""
    total, alpha, beta = 0, 0, 0
    for d, b in zip(dims, betti):
        alpha += d
        beta += b
        total += alpha * beta
    return total


def chain_torsion(c: BasedChainComplex, b_choice=None):
    """Sign-determined torsion of a based, homology-based chain complex.

    The convention is multiplicative with exponent (-1)^(i+1) on the
    transition determinant in degree i, so ``0 -> F --(t-1)--> F -> 0``
    (degrees 1 and 0) has torsion ``1/(t-1)``.  ``b_choice`` may override
    the lifted vectors b^i (a dict degree -> list of vectors of C_i whose
    images form a basis of the boundaries); by default standard basis
    vectors on pivot columns are used.
    """
    c.check_complex()
    betti, pivots = _betti_and_pivots(c)
    homology = c.homology or [[] for _ in c.dims]
    if len(homology) != len(c.dims):
        raise ValidationError("homology bases must be given for every degree")
    for i, h in enumerate(homology):
        if len(h) != betti[i]:
            raise ValidationError(f"H_{i} has dimension {betti[i]} but {len(h)} basis vectors were given")
    zero = c.one * 0

    def unit_vec(n, j):
        return [c.one if k == j else zero for k in range(n)]

    def apply(i, v):
        d = c.boundaries[i - 1]
        return [sum((d[r][k] * v[k] for k in range(len(v))), zero) for r in range(c.dims[i - 1])]

    b = {}
    for i in range(1, c.top + 1):
        if b_choice and i in b_choice:
            b[i] = [list(v) for v in b_choice[i]]
        else:
            b[i] = [unit_vec(c.dims[i], j) for j in pivots[i]]
    b[0] = []
    b[c.top + 1] = []

    result = c.one
    for i in range(c.top + 1):
        n = c.dims[i]
        for h in homology[i]:
            if i >= 1 and any(x for x in apply(i, h)):
                raise ValidationError(f"homology vector in degree {i} is not a cycle")
        vectors = [apply(i + 1, v) for v in b[i + 1]] + [list(h) for h in homology[i]] + b[i]
        if len(vectors) != n:
            raise ValidationError(f"degree {i}: {len(vectors)} vectors for a space of dimension {n}")
        if n == 0:
            continue
        mat = [[vectors[col][row] for col in range(n)] for row in range(n)]
        det = field_det(mat, one=c.one)
        if not det:
            raise ValidationError(f"degree {i}: chosen vectors do not form a basis")
        result = result * det if (i + 1) % 2 == 0 else result / det
    if sign_exponent(c.dims, betti) % 2:
        result = -result
    return result


# -- units ----------------------------------------------------------------------------

@dataclass(frozen=True)
class UnitGroup:
    """Units  +-1 * zeta_N^b * t^a  with a in a sublattice of Z^n."""

    nvars: int
    allow_sign: bool = True
    root_order: int = 1
    lattice: Tuple[Tuple[int, ...], ...] = ()

    def union(self, other):
        if self.nvars != other.nvars:
            raise ValidationError("unit groups in different numbers of variables")
        return UnitGroup(self.nvars, self.allow_sign or other.allow_sign,
                         lcm(self.root_order, other.root_order), self.lattice + other.lattice)

    def contains_exponent(self, a):
        return lattice_contains(list(self.lattice), list(a))

    def to_json(self):
        return {"sign": self.allow_sign, "root_order": str(self.root_order),
                "lattice": [[str(x) for x in v] for v in self.lattice]}


@dataclass(frozen=True)
class Unit:
    """sign * zeta_N^root * t^monomial."""

    sign: int
    root: int
    conductor: int
    monomial: Tuple[int, ...]

    def render(self):
        nv = len(self.monomial)
        field = cyclotomic_field(self.conductor)
        p = LaurentPoly.monomial(field, nv, self.monomial, field.zeta_power(self.root) * self.sign)
        return render_laurent(p)

    def __str__(self):
        return self.render()


def _common_field(*polys):
    N = lcm(*(p.field.conductor for p in polys))
    F = cyclotomic_field(N)
    return F, [p if p.field.conductor == N else p.change_field(F) for p in polys]


@dataclass
class TorsionValue:
    value: RatFunc
    units: UnitGroup
    column: Optional[int] = None
    meta: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.value.is_zero():
            raise ValidationError("torsion values are nonzero")

    @property
    def nvars(self):
        return self.value.nvars

    def normalized(self):
        """(num, den) with monomial content shifted away, den monic in its leading
        term and the sign/root-of-unity part of num's leading coefficient removed."""
        num, _ = self.value.num.normalize_shift()
        den, _ = self.value.den.normalize_shift()
        c = den.leading_term()[1]
        if not c.is_one():
            inv = c.inverse()
            num, den = num.scale(inv), den.scale(inv)
        lc = num.leading_term()[1]
        F = num.field
        for b in range(F.conductor):
            for s in (1, -1):
                u = F.zeta_power(b) * s
                q = lc / u
                if q.is_rational() and q.rational() > 0:
                    if not u.is_one():
                        num = num.scale(u.inverse())
                    return num, den
        return num, den

    def render(self):
        num, den = self.normalized()
        n = render_laurent(num)
        if den.is_constant() and den.constant_coefficient().is_one():
            return n
        if len(num.terms) > 1:
            n = f"({n})"
        d = render_laurent(den)
        if len(den.terms) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __str__(self):
        return self.render()

    def to_json(self):
        num, den = self.normalized()
        return {"num": render_laurent(num), "den": render_laurent(den),
                "conductor": str(num.field.conductor), "unit_group": self.units.to_json()}


def equal_up_to_unit(x: TorsionValue, y: TorsionValue):
    """Decide y = u * x for a unit u of the union of both unit groups.

    Returns ``(True, Unit)`` or ``(False, None)``.  The candidate unit is
    read off the lexicographically leading terms of the cross products; one
    polynomial identity then confirms or refutes it.
    """
    if x.nvars != y.nvars:
        raise ValidationError("torsions in different numbers of variables")
    units = x.units.union(y.units)
    F, (xn, xd, yn, yd) = _common_field(x.value.num, x.value.den, y.value.num, y.value.den)
    A = yn * xd
    B = xn * yd
    if A.is_zero() or B.is_zero():
        return False, None
    ea, ca = A.leading_term()
    eb, cb = B.leading_term()
    a = tuple(p - q for p, q in zip(ea, eb))
    c = ca / cb
    if len(A.terms) != len(B.terms) or A != B.shift(a).scale(c):
        return False, None
    if not units.contains_exponent(a):
        return False, None
    N = lcm(F.conductor, units.root_order)
    G = cyclotomic_field(N)
    cg = G(c) if G is not F else c
    for sign in (1, -1) if units.allow_sign else (1,):
        for b in range(units.root_order if units.root_order > 1 else 1):
            root = G.zeta_power(b * (N // units.root_order))
            if cg == root * sign:
                return True, Unit(sign, b, units.root_order, a)
    return False, None


# -- presentation complexes -------------------------------------------------------------

def _generator_minus_identity(rep, j):
    """Phi(x_j) - I as an m x m matrix of LaurentPoly."""
    F, n, m = rep.field, rep.nvars, rep.dim
    mat = rep.generator_matrix(j)
    e = rep.exps[j]
    out = []
    for u in range(m):
        row = []
        for v in range(m):
            p = LaurentPoly.monomial(F, n, e, mat[u][v])
            if u == v:
                p = p - LaurentPoly.constant(F, n, 1)
            row.append(p)
        out.append(row)
    return out


def wada_torsion(p, rep, lattice=None, column=None):
    """Polynomial torsion of a deficiency-one presentation twisted by ``rep``.

    Column j is the first generator (in order) with det(Phi(x_j) - I) != 0,
    unless ``column`` forces a choice; the value is
    det(Jacobian without block column j) / det(Phi(x_j) - I).
    """
    p.require_deficiency_one()
    k, m = p.num_generators, rep.dim
    F, n = rep.field, rep.nvars
    chosen = None
    candidates = range(k) if column is None else [column]
    for j in candidates:
        den = det_fraction_free(_generator_minus_identity(rep, j))
        if not den.is_zero():
            chosen = j
            break
    if chosen is None:
        if column is not None:
            raise ValidationError(f"det(Phi(x_{column}) - I) vanishes; choose another column")
        raise NotAcyclicError("every det(Phi(x_j) - I) vanishes; twisted complex not acyclic")
    jac = fox_jacobian(p.relators, k, rep)
    drop = set(range(chosen * m, (chosen + 1) * m))
    minor = [[e for c, e in enumerate(row) if c not in drop] for row in jac]
    num = det_fraction_free(minor, field=F, nvars=n)
    if num.is_zero():
        raise NotAcyclicError("twisted Fox Jacobian is degenerate; twisted complex not acyclic")
    if lattice is None:
        lattice = rep.exps
    lattice = tuple(dict.fromkeys(e for e in lattice if any(e)))
    units = UnitGroup(n, True, F.conductor, tuple(lattice))
    return TorsionValue(RatFunc(num, den), units, column=chosen)


def presentation_complex(p, rep):
    """The twisted chain complex C_2 -> C_1 -> C_0 of the presentation 2-complex,
    over rational functions, in geometric bases."""
    k, m = p.num_generators, rep.dim
    jac = fox_jacobian(p.relators, k, rep)  # rows: relator blocks, cols: generator blocks
    rel_dim = len(p.relators) * m
    d2 = [[RatFunc(jac[r][c]) for r in range(rel_dim)] for c in range(k * m)]
    blocks = [_generator_minus_identity(rep, j) for j in range(k)]
    d1 = [[RatFunc(blocks[j][v][u]) for j in range(k) for v in range(m)] for u in range(m)]
    one = RatFunc(LaurentPoly.constant(rep.field, rep.nvars, 1))
    return BasedChainComplex([m, k * m, rel_dim], [d1, d2], None, one)
