import pytest

from twistedtorsion import (
    UNKNOT,
    AbelMap,
    MatRep,
    abelianization,
    cyclotomic_field,
    presentation_from_braid,
    trivial_rep,
    wirtinger_from_pd,
)

TREFOIL_PD = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]
FIGURE_EIGHT_PD = [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]
HOPF_PD = [[4, 1, 3, 2], [2, 3, 1, 4]]

ACCEPTANCE_LINES = []


def knot(name):
    if name == "unknot":
        return UNKNOT
    if name == "trefoil":
        return presentation_from_braid([1, 1, 1], 2)
    if name == "figure-eight":
        return wirtinger_from_pd(FIGURE_EIGHT_PD)
    if name == "hopf":
        return wirtinger_from_pd(HOPF_PD)
    raise KeyError(name)


def default_phi(p):
    return AbelMap.from_matrix(abelianization(p).phi_matrix).validate(p)


def braid_rep(field=None):
    """Parabolic SL2(Z) rep of the 2-strand trefoil group: x1 x2 x1 = x2 x1 x2."""
    F = field or cyclotomic_field(1)
    a = ((F(1), F(1)), (F(0), F(1)))
    b = ((F(1), F(0)), (F(-1), F(1)))
    return MatRep((a, b), 2)


def root_rep(p, q=3):
    """One-dimensional rep sending every generator to zeta_q (factors through H_1 for knots)."""
    F = cyclotomic_field(q)
    return MatRep(tuple(((F.zeta,),) for _ in range(p.num_generators)), 1)


@pytest.fixture
def Q():
    return cyclotomic_field(1)


@pytest.fixture
def trefoil():
    return knot("trefoil")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
