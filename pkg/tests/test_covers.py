import pytest

from conftest import braid_rep, default_phi, knot, root_rep
from twistedtorsion import (
    CoverSpec,
    EpiToG,
    FinAbGroup,
    RatFunc,
    TorsionValue,
    branched_product,
    cyclotomic_field,
    equal_up_to_unit,
    homology_order,
    lhs_direct,
    parse_laurent,
    rhs_product,
    tensor_rep,
    trivial_rep,
    verify_cover,
    wada_torsion,
)
from twistedtorsion import covers as covers_mod
from twistedtorsion.covers import in_power_sublattice
from twistedtorsion.errors import DeficiencyError
from twistedtorsion.torsion import UnitGroup

Q = cyclotomic_field(1)
TREFOIL_DELTA = parse_laurent("t^2 - t + 1", Q, 1)


def setup(name, rho=None):
    p = knot(name)
    return p, default_phi(p), rho or trivial_rep(Q, p.num_generators)


def test_rhs_trivial_group(trefoil):
    p, phi, rho = setup("trefoil")
    total, factors = rhs_product(p, phi, rho, CoverSpec.trivial(1))
    assert len(factors) == 1
    assert total.value == wada_torsion(p, tensor_rep(phi, rho, Q)).value


def test_rhs_trefoil_z2():
    p, phi, rho = setup("trefoil")
    total, factors = rhs_product(p, phi, rho, CoverSpec.cyclic(2, [1]))
    # oracle: substitute t -> -t in the untwisted value and multiply
    F = cyclotomic_field(2)
    x = RatFunc(parse_laurent("t^2 - t + 1", F, 1), parse_laurent("t - 1", F, 1))
    y = RatFunc(parse_laurent("t^2 + t + 1", F, 1), parse_laurent("-t - 1", F, 1))
    expected = TorsionValue(x * y, UnitGroup(1, True, 2, ((1,),)))
    assert equal_up_to_unit(total, expected)[0]
    closed = TorsionValue(RatFunc(parse_laurent("t^4 + t^2 + 1", F, 1), parse_laurent("-t^2 + 1", F, 1)),
                          expected.units)
    assert equal_up_to_unit(total, closed)[0]


def test_rhs_trefoil_z3_direct_expansion():
    p, phi, rho = setup("trefoil")
    total, factors = rhs_product(p, phi, rho, CoverSpec.cyclic(3, [1]))
    F = cyclotomic_field(3)
    z = "zeta(3)"
    num = (parse_laurent("t^2 - t + 1", F, 1) * parse_laurent(f"{z}^2*t^2 - {z}*t + 1", F, 1)
           * parse_laurent(f"{z}*t^2 - {z}^2*t + 1", F, 1))
    den = parse_laurent("t^3 - 1", F, 1)
    assert equal_up_to_unit(total, TorsionValue(RatFunc(num, den), total.units))[0]
    assert str(total) == "(t^6 + 2*t^3 + 1)/(t^3 - 1)"


def test_rhs_order_independence():
    p, phi, rho = setup("hopf")
    g = FinAbGroup((2, 2))
    cover = CoverSpec(g, EpiToG(g, ((1, 0), (0, 1)), 2))
    a, _ = rhs_product(p, phi, rho, cover)
    b, _ = rhs_product(p, phi, rho, cover, order=[3, 1, 0, 2])
    assert a.value == b.value


def test_rhs_parallel_matches_sequential():
    p, phi, rho = setup("figure-eight")
    cover = CoverSpec.cyclic(4, [1])
    a, fa = rhs_product(p, phi, rho, cover, workers=1)
    b, fb = rhs_product(p, phi, rho, cover, workers=2)
    assert a.value == b.value
    assert [f.value for _, f in fa] == [f.value for _, f in fb]


def test_lhs_trivial_cover():
    p, phi, rho = setup("trefoil")
    assert lhs_direct(p, phi, rho, CoverSpec.trivial(1)).value == wada_torsion(p, tensor_rep(phi, rho, Q)).value


def test_lhs_trefoil_q2_in_t_squared():
    p, phi, rho = setup("trefoil")
    lhs = lhs_direct(p, phi, rho, CoverSpec.cyclic(2, [1]))
    assert in_power_sublattice(lhs, 2)
    assert str(lhs) == "(t^4 + t^2 + 1)/(t^2 - 1)"


@pytest.mark.parametrize("name", ["unknot", "trefoil", "figure-eight"])
@pytest.mark.parametrize("q", [2, 3, 4])
def test_verify_cover_cyclic(name, q):
    p, phi, rho = setup(name)
    report = verify_cover(p, phi, rho, CoverSpec.cyclic(q, [1]))
    assert report.equal and report.sublattice
    assert len(report.factors) == q


def test_verify_cover_braid_rep(trefoil):
    report = verify_cover(trefoil, default_phi(trefoil), braid_rep(), CoverSpec.cyclic(2, [1]))
    assert report.equal


def test_verify_cover_hopf_klein_four():
    p, phi, rho = setup("hopf")
    g = FinAbGroup((2, 2))
    report = verify_cover(p, phi, rho, CoverSpec(g, EpiToG(g, ((1, 0), (0, 1)), 2)))
    assert report.equal and report.sublattice is True
    assert report.to_json()["equal"] is True


def test_verify_cover_partial_report(monkeypatch):
    p, phi, rho = setup("trefoil")

    def refuse(*args, **kwargs):
        raise DeficiencyError("cannot certify deficiency 1")

    monkeypatch.setattr(covers_mod, "lhs_direct", refuse)
    report = verify_cover(p, phi, rho, CoverSpec.cyclic(2, [1]))
    assert report.lhs is None and report.equal is None
    assert "deficiency" in report.lhs_error
    assert report.rhs is not None


def test_branched_product_examples():
    one = parse_laurent("1", Q, 1)
    for q in (1, 2, 5):
        assert branched_product(one, q) == one
    assert str(branched_product(TREFOIL_DELTA, 2)) == "t^4 + t^2 + 1"
    # exact product (t^2 - t + 1)(z^2 t^2 - z t + 1)(z t^2 - z^2 t + 1) in Q(zeta_3)
    F = cyclotomic_field(3)
    z = F.zeta
    d = TREFOIL_DELTA.change_field(F)
    direct = d * d.substitute_scaling([z]) * d.substitute_scaling([z * z])
    assert branched_product(TREFOIL_DELTA, 3).change_field(F) == direct
    assert str(branched_product(TREFOIL_DELTA, 3)) == "t^6 + 2*t^3 + 1"


def test_branched_product_is_galois_stable():
    F = cyclotomic_field(5)
    d = parse_laurent("t^2 - 3*t + 1", F, 1)
    out = branched_product(d, 5).change_field(F)
    for j in range(1, 5):
        assert out.map_coefficients(lambda c: c.galois(j)) == out


def test_homology_order_examples():
    assert homology_order(TREFOIL_DELTA, 2) == 3
    assert homology_order(TREFOIL_DELTA, 3) == 4
    assert homology_order(parse_laurent("1", Q, 1), 7) == 1
    assert homology_order(parse_laurent("t^2 - 3*t + 1", Q, 1), 2) == 5
    # the 6-fold branched cover of the trefoil has infinite first homology
    assert homology_order(TREFOIL_DELTA, 6) == "infinite"


def test_trefoil_q3_norm_by_hand():
    F = cyclotomic_field(3)
    v = TREFOIL_DELTA.change_field(F).evaluate([F.zeta])
    assert v == -2 * F.zeta
    assert v.norm() == 4


def test_verify_cover_root_rep():
    p = knot("trefoil")
    rho = root_rep(p, 3)
    report = verify_cover(p, default_phi(p), rho, CoverSpec.cyclic(2, [1]))
    assert report.equal and report.sublattice
