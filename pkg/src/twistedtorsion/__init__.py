"""Exact twisted torsion and twisted Alexander polynomials of finite abelian covers."""
from .covers import (
    CoverReport,
    CoverSpec,
    branched_product,
    homology_order,
    lhs_direct,
    rhs_product,
    verify_cover,
)
from .errors import (
    ConductorMismatchError,
    DeficiencyError,
    NotAcyclicError,
    ParseError,
    TorsionError,
    UnsupportedPresentationError,
    ValidationError,
)
from .fox import GroupRingElem, evaluate, fox_derivative, fox_jacobian
from .groups import (
    UNKNOT,
    EpiToG,
    FinAbGroup,
    Presentation,
    abelianization,
    parse_word,
    presentation_from_braid,
    reidemeister_schreier,
    wirtinger_from_pd,
)
from .reps import (
    AbelMap,
    Character,
    MatRep,
    TensorRep,
    characters,
    pullback,
    pullback_character,
    tensor_rep,
    trivial_rep,
    twist,
)
from .scalars import (
    CycloNum,
    LaurentPoly,
    RatFunc,
    cyclo_embed_root_of_unity,
    cyclotomic_field,
    det_fraction_free,
    parse_laurent,
    ratfunc_equal,
    smith_normal_form,
)
from .torsion import (
    BasedChainComplex,
    TorsionValue,
    UnitGroup,
    chain_torsion,
    equal_up_to_unit,
    presentation_complex,
    wada_torsion,
)

__version__ = "0.1.0"
