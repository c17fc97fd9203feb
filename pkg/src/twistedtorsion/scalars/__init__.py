"""Exact arithmetic tower: Q -> Q(zeta_N) -> Laurent polynomials -> rational functions."""
from .cyclotomic import (
    CycloField,
    CycloNum,
    cyclo_embed_root_of_unity,
    cyclotomic_field,
    cyclotomic_polynomial,
    euler_phi,
)
from .laurent import LaurentPoly
from .linalg import (
    det_fraction_free,
    field_det,
    field_rank,
    int_det,
    int_matmul,
    lattice_contains,
    lattice_index,
    pivot_columns,
    smith_normal_form,
)
from .parsing import parse_cyclo, parse_laurent, render_cyclo, render_laurent, required_conductor
from .ratfunc import RatFunc, ratfunc_equal, univariate_gcd

__all__ = [
    "CycloField",
    "CycloNum",
    "LaurentPoly",
    "RatFunc",
    "cyclo_embed_root_of_unity",
    "cyclotomic_field",
    "cyclotomic_polynomial",
    "det_fraction_free",
    "euler_phi",
    "field_det",
    "field_rank",
    "int_det",
    "int_matmul",
    "lattice_contains",
    "lattice_index",
    "parse_cyclo",
    "parse_laurent",
    "pivot_columns",
    "ratfunc_equal",
    "render_cyclo",
    "render_laurent",
    "required_conductor",
    "smith_normal_form",
    "univariate_gcd",
]
