"""Plane cubics over exact fields: singular loci, splitting, degenerations, local points."""
from .classify import (
    DegenerationType,
    UnsupportedField,
    classify_degeneration,
    euler_char_from_normalization,
)
from .cubic import MONOMIAL_NAMES, MONOMIALS, PlaneCubic, ProjPoint, projective_points
from .points import count_points, find_smooth_Fp_point, is_smooth_at, rational_points
from .singular import InfiniteSingularLocus, SingularPoint, singular_points, tangent_cone_rank
from .solvability import SolvabilityCertificate, local_solvability, real_solvability
from .splitting import (
    CharacteristicThree,
    SearchSpaceTooLarge,
    splits_completely,
    splits_into_lines,
    splits_into_lines_oracle,
)

__all__ = [
    "CharacteristicThree", "DegenerationType", "InfiniteSingularLocus", "MONOMIALS", "MONOMIAL_NAMES",
    "PlaneCubic", "ProjPoint", "SearchSpaceTooLarge", "SingularPoint", "SolvabilityCertificate",
    "UnsupportedField", "classify_degeneration", "count_points", "euler_char_from_normalization",
    "find_smooth_Fp_point", "is_smooth_at", "local_solvability", "projective_points",
    "rational_points", "real_solvability", "singular_points", "splits_completely",
    "splits_into_lines", "splits_into_lines_oracle", "tangent_cone_rank",
]
