"""Torsion of finite abelian covers: the cover side, the character product, and
the classical one-variable branched-cover formulas."""
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import lcm
from typing import List, Optional

from .errors import DeficiencyError, NotAcyclicError, TorsionError, ValidationError
from .groups.finab import EpiToG, FinAbGroup
from .groups.schreier import reidemeister_schreier
from .reps import AbelMap, MatRep, characters, pullback, pullback_character, tensor_rep, twist
from .scalars.cyclotomic import cyclotomic_field
from .scalars.laurent import LaurentPoly
from .scalars.ratfunc import RatFunc
from .torsion import TorsionValue, Unit, UnitGroup, equal_up_to_unit, wada_torsion

__all__ = [
    "CoverSpec",
    "CoverReport",
    "session_conductor",
    "rhs_product",
    "lhs_direct",
    "verify_cover",
    "in_power_sublattice",
    "in_kernel_lattice",
    "branched_product",
    "homology_order",
]


@dataclass(frozen=True)
class CoverSpec:
    group: FinAbGroup
    pi_bar: EpiToG

    @classmethod
    def cyclic(cls, q, images):
        """G = Z/q with t_i -> images[i]."""
        if q == 1:
            return cls.trivial(len(images))
        g = FinAbGroup((q,))
        return cls(g, EpiToG(g, (tuple(images),), len(images)).validate())

    @classmethod
    def trivial(cls, nvars):
        return cls(FinAbGroup(()), EpiToG.trivial(nvars))

    def validate(self):
        self.pi_bar.validate()
        return self

    def to_json(self):
        return {"group": [str(q) for q in self.group.invariant_factors],
                "pi_bar": [[str(x) for x in row] for row in self.pi_bar.matrix]}


@dataclass
class CoverReport:
    lhs: Optional[TorsionValue]
    rhs: TorsionValue
    equal: Optional[bool]
    witness: Optional[Unit]
    factors: List[tuple]
    timings: dict = dc_field(default_factory=dict)
    lhs_error: Optional[str] = None
    sublattice: Optional[bool] = None

    def to_json(self):
        return {
            "equal": self.equal,
            "lhs": self.lhs.to_json() if self.lhs is not None else None,
            "lhs_error": self.lhs_error,
            "rhs": self.rhs.to_json(),
            "witness": str(self.witness) if self.witness is not None else None,
            "factors": [{"character": str(xi), "torsion": tv.to_json()} for xi, tv in self.factors],
            "sublattice": self.sublattice,
            "timings": {k: f"{v:.4f}" for k, v in self.timings.items()},
        }


def session_conductor(cover: CoverSpec, rho: MatRep, override=None):
    """lcm of the exponent of G, the conductor of rho's entries and any override."""
    return lcm(cover.group.exponent, rho.field.conductor, override or 1)


def _factor(p, base, xi, pi_bar, F):
    xi_bar = pullback_character(xi, pi_bar, F)
    try:
        return wada_torsion(p, twist(base, xi_bar))
    except NotAcyclicError as exc:
        raise NotAcyclicError(exc.args[0], character=str(xi)) from exc


def _factor_job(args):
    return _factor(*args)


def rhs_product(p, phi: AbelMap, rho: MatRep, cover: CoverSpec, conductor=None, workers=1, order=None):
    """Product over all characters xi of the torsion twisted by xi o pi_bar.

    Returns ``(TorsionValue, [(xi, factor), ...])``.  With ``workers > 1``
    the factors are computed in a process pool; they are always multiplied
    in character order (or in the order given by ``order``, a permutation of
    the character list, which the result cannot depend on).
    """
    F = cyclotomic_field(conductor or session_conductor(cover, rho))
    base = tensor_rep(phi, rho, F)
    chars = characters(cover.group)
    if order is not None:
        chars = [chars[i] for i in order]
    jobs = [(p, base, xi, cover.pi_bar, F) for xi in chars]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(_factor_job, jobs))
    else:
        values = [_factor_job(j) for j in jobs]
    total = RatFunc(LaurentPoly.constant(F, phi.nvars, 1))
    for v in values:
        total = total * v.value
    lattice = tuple(dict.fromkeys(e for e in phi.images if any(e)))
    units = UnitGroup(phi.nvars, True, F.conductor, lattice)
    return TorsionValue(total, units), list(zip(chars, values))


def lhs_direct(p, phi: AbelMap, rho: MatRep, cover: CoverSpec, conductor=None):
    """Torsion of the cover's presentation under the pulled-back phi and rho."""
    F = cyclotomic_field(conductor or session_conductor(cover, rho))
    sub = reidemeister_schreier(p, phi.matrix(), cover.pi_bar)
    phi_hat, rho_hat = pullback(sub, phi, rho)
    rep = tensor_rep(phi_hat, rho_hat, F)
    lattice = tuple(dict.fromkeys(e for e in phi_hat.images if any(e)))
    tv = wada_torsion(sub.presentation, rep, lattice=lattice)
    tv.meta["subgroup"] = sub
    return tv


def in_power_sublattice(tv: TorsionValue, q):
    """One variable: after unit normalization, num and den are polynomials in t^q."""
    if tv.nvars != 1:
        raise ValidationError("the power-sublattice check applies to one variable only")
    num, den = tv.normalized()
    return all(e[0] % q == 0 for poly in (num, den) for e in poly.terms)


def in_kernel_lattice(tv: TorsionValue, pi_bar: EpiToG):
    """num and den are each a monomial times a polynomial supported on ker(pi_bar).

    For one variable and G = Z/q this is the power-sublattice property; it is
    unchanged by multiplying with units t^a.
    """
    for poly in (tv.value.num, tv.value.den):
        exps = list(poly.terms)
        e0 = exps[0]
        for e in exps[1:]:
            if any(pi_bar.image(tuple(a - b for a, b in zip(e, e0)))):
                return False
    return True


def _as_displayed(tv):
    return TorsionValue(RatFunc(*tv.normalized()), tv.units, tv.column, tv.meta)


def verify_cover(p, phi: AbelMap, rho: MatRep, cover: CoverSpec, conductor=None, workers=1):
    """Compute both sides of the cover formula independently and compare up to units."""
    N = conductor or session_conductor(cover, rho)
    timings = {}
    t0 = time.perf_counter()
    rhs, factors = rhs_product(p, phi, rho, cover, conductor=N, workers=workers)
    timings["rhs"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    try:
        lhs = lhs_direct(p, phi, rho, cover, conductor=N)
    except DeficiencyError as exc:
        timings["lhs"] = time.perf_counter() - t0
        return CoverReport(None, rhs, None, None, factors, timings, lhs_error=str(exc))
    timings["lhs"] = time.perf_counter() - t0
    # witness relates the displayed (normalized) representatives
    equal, witness = equal_up_to_unit(_as_displayed(lhs), _as_displayed(rhs))
    sub = None
    if cover.group.order > 1:
        sub = in_kernel_lattice(lhs, cover.pi_bar)
        if phi.nvars == 1 and cover.group.rank == 1:
            sub = sub and in_power_sublattice(lhs, cover.group.invariant_factors[0])
    return CoverReport(lhs, rhs, equal, witness, factors, timings, sublattice=sub)


# -- one-variable classical formulas ---------------------------------------------------

def _check_one_variable(delta, q):
    if delta.nvars != 1:
        raise ValidationError("expected a polynomial in one variable")
    if q < 1:
        raise ValidationError("q must be positive")


def branched_product(delta: LaurentPoly, q: int, conductor=None):
    """prod_{k=0}^{q-1} delta(zeta_q^k t), normalized to min degree 0 and positive
    leading coefficient, returned over Q.  The result is checked to be
    zeta-free and a polynomial in t^q."""
    _check_one_variable(delta, q)
    N = lcm(q, delta.field.conductor, conductor or 1)
    F = cyclotomic_field(N)
    d = delta.change_field(F)
    out = LaurentPoly.constant(F, 1, 1)
    for k in range(q):
        out = out * d.substitute_roots([k * (N // q)])
    if not out.is_rational():
        raise TorsionError("internal: branched product has irrational coefficients")
    out, _ = out.normalize_shift()
    Q = cyclotomic_field(1)
    out = LaurentPoly(Q, 1, {e: Q(c.rational()) for e, c in out.terms.items()})
    if out.terms and out.leading_term()[1].rational() < 0:
        out = -out
    if any(e[0] % q for e in out.terms):
        raise TorsionError("internal: branched product is not a polynomial in t^q")
    return out


def homology_order(delta: LaurentPoly, q: int, conductor=None):
    """|prod_{k=1}^{q-1} delta(zeta_q^k)|, or the string "infinite" when it vanishes."""
    _check_one_variable(delta, q)
    if q < 2:
        raise ValidationError("homology order needs q >= 2")
    N = lcm(q, delta.field.conductor, conductor or 1)
    F = cyclotomic_field(N)
    d = delta.change_field(F)
    total = F.one
    for k in range(1, q):
        total = total * d.evaluate([F.zeta_power(k * (N // q))])
    if not total.is_rational():
        raise TorsionError("internal: norm is not rational")
    value = abs(total.rational())
    if value == 0:
        return "infinite"
    return int(value) if value.denominator == 1 else Fraction(value)
