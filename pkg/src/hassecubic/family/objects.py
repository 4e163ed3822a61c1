"""The pencil W_u: 5x^3 + 9y^3 + 10z^3 + 12u^3(x+y+z)^3 and its base change u = u(t)."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from ..cubicgeom.cubic import PlaneCubic
from ..polyring.multipoly import MultiPoly
from ..polyring.unipoly import UniPoly

B_CHECKSUM = "be66098546db437d41eb4bb4f4c69d687a6e863a15acf0083a470defdaf5a947"

# (x+y+z)^3 in monomial order x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3
_CUBE_OF_SUM = (1, 3, 3, 3, 6, 3, 1, 3, 3, 1)
_DIAGONAL = (5, 0, 0, 0, 0, 0, 9, 0, 0, 10)


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "oo"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def _load_b_table() -> tuple[tuple[int, int], ...]:
    raw = resources.files(__package__).joinpath("data").joinpath("jacobian_B.txt").read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != B_CHECKSUM:
        raise RuntimeError(f"jacobian_B.txt: sha256 {digest} != {B_CHECKSUM}")
    rows = []
    for line in raw.decode().splitlines():
        if line.strip() and not line.startswith("#"):
            e, c = line.split()
            rows.append((int(e), int(c)))
    return tuple(rows)


@dataclass(frozen=True)
class FamilyConstants:
    """Every number the verifier compares against; negative controls swap one of them."""

    c1_discriminant: int = 242325
    c1_factorization: tuple[tuple[int, int], ...] = ((3, 3), (5, 2), (359, 1))
    singular12: tuple[int, ...] = (50625, 0, 0, 999000, 0, 0, 4282200, 0, 0, 6065760, 0, 0, 2062096)
    singular12_disc_factorization: tuple[tuple[int, int], ...] = ((2, 146), (3, 92), (5, 50), (359, 4))
    a_scalar: int = 145800
    b_table: tuple[tuple[int, int], ...] = field(default_factory=_load_b_table)
    bad_primes: tuple[int, ...] = (2, 3, 5, 359)

    def singular12_poly(self) -> UniPoly:
        return UniPoly(self.singular12, "u")


DEFAULT_CONSTANTS = FamilyConstants()


def _as_rational(v):
    return Fraction(v) if isinstance(v, (int, Fraction, str)) else v


def build_fiber(u) -> PlaneCubic:
    """W_u as a ternary cubic.  ``u`` may be a rational, INFINITY, or a polynomial.

    At u = INFINITY the pencil's other chart gives 5x^3 + 9y^3 - 10(x+y)^3 + 12w^3,
    returned in the coordinates (x, y, w).
    """
    if u is INFINITY:
        return binary_part_plus(12)
    u = _as_rational(u)
    c = 12 * u**3
    coeffs = [d + c * k for d, k in zip(_DIAGONAL, _CUBE_OF_SUM)]
    return PlaneCubic([Fraction(v) if isinstance(v, int) else v for v in coeffs])


def binary_part_plus(w_coeff) -> PlaneCubic:
    """5x^3 + 9y^3 - 10(x+y)^3 + w_coeff * z^3 (z playing the role of w)."""
    return PlaneCubic([5 - 10, -30, 0, -30, 0, 0, 9 - 10, 0, 0, w_coeff])


def second_chart(r) -> PlaneCubic:
    """G(x, y, w) = W_u(x, y, r w - x - y) for r = 1/u: 5x^3 + 9y^3 + 10(rw - x - y)^3 + 12w^3."""
    x, y, w = MultiPoly.gens(("x", "y", "z"))
    r = Fraction(r)
    G = 5 * x**3 + 9 * y**3 + 10 * (w * r - x - y) ** 3 + 12 * w**3
    return PlaneCubic.from_multipoly(G)


def second_chart_to_fiber(point, r, modulus: int | None = None):
    """(x, y, w) on the second chart -> (x, y, r w - x - y) on W_u."""
    x, y, w = point
    r = Fraction(r)
    if modulus is None:
        return (x, y, r * w - x - y)
    rr = r.numerator * pow(r.denominator, -1, modulus) % modulus
    return (x % modulus, y % modulus, (rr * w - x - y) % modulus)


def t_numerator() -> UniPoly:
    return UniPoly([-1, 0, 0, 0, -1] + [0] * 7 + [1], "t")


def t_denominator() -> UniPoly:
    return UniPoly([-1] + [0] * 7 + [-1, 0, 0, 0, 1], "t")


def u_of_t(t):
    """u(t) = (t^12 - t^4 - 1)/(t^12 - t^8 - 1), with u(INFINITY) = 1 and INFINITY at poles."""
    if t is INFINITY:
        return Fraction(1)
    t = Fraction(t)
    num, den = t_numerator()(t), t_denominator()(t)
    if den == 0:
        return INFINITY
    return Fraction(num) / Fraction(den)


def tfiber_model() -> tuple[PlaneCubic, UniPoly]:
    """(G, d) where G = d^3 X_t has polynomial coefficients in t and d = t^12 - t^8 - 1."""
    n, d = t_numerator(), t_denominator()
    d3, c = d**3, n**3 * 12
    coeffs = [d3 * k + c * m for k, m in zip(_DIAGONAL, _CUBE_OF_SUM)]
    return PlaneCubic(coeffs), d


def dehomogenized_fiber() -> MultiPoly:
    """h(x, y, u) = 5x^3 + 9y^3 + 10 + 12u^3(x+y+1)^3."""
    x, y, u = MultiPoly.gens(("x", "y", "u"))
    return 5 * x**3 + 9 * y**3 + 10 + 12 * u**3 * (x + y + 1) ** 3


def binary_cubic() -> UniPoly:
    """5x^3 + 9y^3 - 10(x+y)^3 at y = 1."""
    x = UniPoly([0, 1])
    return x**3 * 5 + 9 - (x + 1) ** 3 * 10


def A_of_t(constants: FamilyConstants = DEFAULT_CONSTANTS) -> UniPoly:
    return t_numerator() ** 3 * t_denominator() * constants.a_scalar


def B_of_t(constants: FamilyConstants = DEFAULT_CONSTANTS) -> UniPoly:
    top = max(e for e, _ in constants.b_table)
    cs = [0] * (top + 1)
    for e, c in constants.b_table:
        cs[e] += c
    return UniPoly(cs, "t")
