"""Invariants of ternary cubics and Weierstrass models of their Jacobians."""
from .invariants import (
    C_A,
    C_B,
    AronholdInvariants,
    BadCharacteristic,
    SingularCubic,
    SingularCurve,
    WeierstrassCurve,
    aronhold_invariants,
    invariant_discriminant,
    j_invariant,
    jacobian_weierstrass,
    weierstrass_discriminant,
)

__all__ = [
    "C_A", "C_B", "AronholdInvariants", "BadCharacteristic", "SingularCubic", "SingularCurve",
    "WeierstrassCurve", "aronhold_invariants", "invariant_discriminant", "j_invariant",
    "jacobian_weierstrass", "weierstrass_discriminant",
]
