"""Free-group words, presentations, knot/link ingestion and Reidemeister-Schreier."""
from .finab import EpiToG, FinAbGroup
from .knots import UNKNOT, presentation_from_braid, wirtinger_from_pd
from .presentation import Abelianization, Presentation, abelianization, relation_matrix
from .schreier import SubgroupData, reidemeister_schreier, tietze_simplify
from .words import (
    concat,
    cyclic_reduce,
    exponent_sums,
    inverse,
    letter,
    letter_generator,
    parse_word,
    reduce_word,
    render_word,
)

__all__ = [
    "Abelianization",
    "EpiToG",
    "FinAbGroup",
    "Presentation",
    "SubgroupData",
    "UNKNOT",
    "abelianization",
    "concat",
    "cyclic_reduce",
    "exponent_sums",
    "inverse",
    "letter",
    "letter_generator",
    "parse_word",
    "presentation_from_braid",
    "reduce_word",
    "reidemeister_schreier",
    "relation_matrix",
    "render_word",
    "tietze_simplify",
    "wirtinger_from_pd",
]
