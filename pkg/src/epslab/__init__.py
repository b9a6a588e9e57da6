"""Exact epsilon and Amao multiplicities of monomial ideals in monomial quotient rings."""
from .asymptotics import (
    FamilyKind,
    LimitEstimate,
    SequenceRecord,
    SwansonResult,
    amao_grid,
    decomposition_sequences,
    epsilon_sequence,
    estimate_limit,
    swanson_c_search,
    swanson_search,
)
from .length import LengthResult, hilbert_function, is_finite_colength_pair, length_quotient
from .monomial import Monomial, MonomialIdeal
from .ring import QuotientRing, RingIdeal, ideal_in_ring, make_ring

__all__ = [
    "FamilyKind", "LimitEstimate", "SequenceRecord", "SwansonResult", "amao_grid",
    "decomposition_sequences", "epsilon_sequence", "estimate_limit", "swanson_c_search",
    "swanson_search", "LengthResult", "hilbert_function", "is_finite_colength_pair",
    "length_quotient", "Monomial", "MonomialIdeal", "QuotientRing", "RingIdeal",
    "ideal_in_ring", "make_ring",
]
__version__ = "0.1.0"
