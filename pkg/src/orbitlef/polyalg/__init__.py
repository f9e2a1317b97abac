"""Exact polynomial algebra: arithmetic, Groebner bases, Hilbert series."""

from .groebner import GroebnerBasis, PartialResult, buchberger, is_groebner, normal_form
from .hilbert import ProjectiveInvariants, hilbert_function, hilbert_numerator, proj_dim_degree
from .ideal import (
    Ideal,
    homogenize_generators,
    homogenize_ideal,
    ideal_subset,
    ideals_equal,
    subset_witness,
)
from .polynomial import DEGLEX, DEGREVLEX, LEX, Polynomial, PolyRing, TermOrder, parse_polynomial

__all__ = [
    "DEGLEX",
    "DEGREVLEX",
    "LEX",
    "GroebnerBasis",
    "Ideal",
    "PartialResult",
    "PolyRing",
    "Polynomial",
    "ProjectiveInvariants",
    "TermOrder",
    "buchberger",
    "hilbert_function",
    "hilbert_numerator",
    "homogenize_generators",
    "homogenize_ideal",
    "ideal_subset",
    "ideals_equal",
    "is_groebner",
    "normal_form",
    "parse_polynomial",
    "proj_dim_degree",
    "subset_witness",
]
