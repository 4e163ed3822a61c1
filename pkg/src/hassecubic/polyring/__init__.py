from .elimination import EliminationDegenerate, eliminate_singular_locus
from .irreducible import Inconclusive, IrreducibilityCertificate, Witness, certify_irreducible, factor_over_Q, is_irreducible_over_Q
from .multipoly import MultiPoly, ZeroPolynomial
from .resultant import resultant
from .unipoly import (
    DegreeTooSmall,
    UniPoly,
    discriminant,
    factor_mod_p,
    gcd_and_squarefree_part,
    poly_gcd,
)

__all__ = [
    "EliminationDegenerate",
    "eliminate_singular_locus",
    "Inconclusive",
    "IrreducibilityCertificate",
    "Witness",
    "certify_irreducible",
    "factor_over_Q",
    "is_irreducible_over_Q",
    "MultiPoly",
    "ZeroPolynomial",
    "resultant",
    "DegreeTooSmall",
    "UniPoly",
    "discriminant",
    "factor_mod_p",
    "gcd_and_squarefree_part",
    "poly_gcd",
]
