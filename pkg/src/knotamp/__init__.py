"""Quantum link amplitudes from Morse diagrams, with exact arithmetic."""

from .braid import BraidWord, braid_to_morse, exponent_sum, parse_braid
from .diagram import (
    MorseDiagram,
    MorseEvent,
    MorseMove,
    apply_move,
    components,
    parse_morse,
    random_equivalent,
    seifert_count,
    validate,
    writhe,
)
from .models import TangleModel, bracket_model, product_model, swap_fg_model, virtual_model
from .scalar_ring import A, GaussInt, LaurentPoly
from .skein_oracle import normalized_skein, skein_bracket
from .statesum import evaluate, normalized, oriented_closed_form
from .yangbaxter import check_enhancement, check_model, check_ybe, is_entangling_2q, mu_from_cupcap

__version__ = "0.1.0"

__all__ = [
    "A",
    "GaussInt",
    "LaurentPoly",
    "BraidWord",
    "parse_braid",
    "exponent_sum",
    "braid_to_morse",
    "MorseDiagram",
    "MorseEvent",
    "MorseMove",
    "parse_morse",
    "validate",
    "writhe",
    "components",
    "seifert_count",
    "apply_move",
    "random_equivalent",
    "TangleModel",
    "bracket_model",
    "swap_fg_model",
    "product_model",
    "virtual_model",
    "evaluate",
    "normalized",
    "oriented_closed_form",
    "skein_bracket",
    "normalized_skein",
    "check_ybe",
    "check_model",
    "is_entangling_2q",
    "check_enhancement",
    "mu_from_cupcap",
]
