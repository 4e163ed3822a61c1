"""Plane cubics and projective points."""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

from ..galoisfield import ExtField, FqElem
from ..polyring.multipoly import MultiPoly

# x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3
MONOMIALS: tuple[tuple[int, int, int], ...] = (
    (3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
    (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3),
)
MONOMIAL_NAMES = ("x^3", "x^2y", "x^2z", "xy^2", "xyz", "xz^2", "y^3", "y^2z", "yz^2", "z^3")
XYZ = ("x", "y", "z")


class PlaneCubic:
    """Ternary cubic form with 10 coefficients in MONOMIALS order.

    ``p`` marks integer coefficients read modulo a prime; otherwise the
    coefficients are exact rationals, polynomials (MultiPoly), or elements of
    one finite field ``field``.
    """

    __slots__ = ("coeffs", "p", "field")

    def __init__(self, coeffs: Sequence, p: int | None = None):
        coeffs = tuple(coeffs)
        if len(coeffs) != 10:
            raise ValueError("a plane cubic has exactly 10 coefficients")
        field = None
        if p is not None:
            coeffs = tuple(int(c) % p for c in coeffs)
        else:
            coeffs = tuple(c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c for c in coeffs)
            kinds = {c.field for c in coeffs if isinstance(c, FqElem)}
            if kinds:
                field = kinds.pop()
                if kinds:
                    raise ValueError("coefficients from different fields")
                coeffs = tuple(field(c) for c in coeffs)
                p = None
        if not any(coeffs):
            raise ValueError("the zero form does not define a cubic")
        self.coeffs = coeffs
        self.p = p
        self.field = field

    @classmethod
    def from_multipoly(cls, F: MultiPoly, p: int | None = None) -> "PlaneCubic":
        if F.vars != XYZ:
            F = F.drop_to(XYZ) if set(F.vars) >= set(XYZ) and all(
                sum(e[F.vars.index(v)] for v in XYZ) == sum(e) for e in F.terms) else F
        if not F.is_homogeneous() or F.degree() != 3:
            raise ValueError("not a homogeneous cubic")
        return cls([F.terms.get(m, 0) for m in MONOMIALS], p)

    @classmethod
    def from_dict(cls, d: dict[str, object], p: int | None = None) -> "PlaneCubic":
        return cls([d.get(n, 0) for n in MONOMIAL_NAMES], p)

    def __eq__(self, other):
        return isinstance(other, PlaneCubic) and (self.coeffs, self.p, self.field) == (other.coeffs, other.p, other.field)

    def __hash__(self):
        return hash((self.coeffs, self.p))

    def __repr__(self):
        body = " + ".join(f"({c})*{n}" for c, n in zip(self.coeffs, MONOMIAL_NAMES) if c)
        dom = f" over F_{self.p}" if self.p else (f" over {self.field}" if self.field else "")
        return f"PlaneCubic({body}{dom})"

    @property
    def characteristic(self) -> int:
        if self.p:
            return self.p
        if self.field is not None:
            return self.field.p
        return 0

    def as_dict(self) -> dict[str, object]:
        return dict(zip(MONOMIAL_NAMES, self.coeffs))

    def as_multipoly(self, variables: Sequence[str] = XYZ) -> MultiPoly:
        return MultiPoly(tuple(variables), dict(zip(MONOMIALS, self.coeffs)))

    def coefficient_field(self):
        """The finite field holding the coefficients (F_p as a degree-1 ExtField)."""
        from ..galoisfield import prime_field

        if self.field is not None:
            return self.field
        if self.p:
            return prime_field(self.p)
        return None

    def over(self, K: ExtField) -> list:
        """Coefficients as elements of the finite field K."""
        if self.field is not None:
            if self.field != K:
                raise ValueError("no embedding between distinct extension fields")
            return list(self.coeffs)
        if self.p and self.p != K.p:
            raise ValueError("characteristic mismatch")
        return [K(int(c)) for c in self.coeffs]

    def __call__(self, x, y, z):
        v = 0
        for c, (i, j, k) in zip(self.coeffs, MONOMIALS):
            if c:
                v = v + c * x**i * y**j * z**k
        return v % self.p if self.p else v

    def gradient(self, x, y, z):
        gx = gy = gz = 0
        for c, (i, j, k) in zip(self.coeffs, MONOMIALS):
            if not c:
                continue
            if i:
                gx = gx + c * i * x ** (i - 1) * y**j * z**k
            if j:
                gy = gy + c * j * x**i * y ** (j - 1) * z**k
            if k:
                gz = gz + c * k * x**i * y**j * z ** (k - 1)
        if self.p:
            return gx % self.p, gy % self.p, gz % self.p
        return gx, gy, gz

    def reduce(self, p: int) -> "PlaneCubic":
        """Reduction mod p of a p-integral rational cubic."""
        out = []
        for c in self.coeffs:
            c = Fraction(c)
            if c.denominator % p == 0:
                raise ValueError(f"coefficient {c} is not {p}-integral")
            out.append(c.numerator * pow(c.denominator, -1, p) % p)
        return PlaneCubic(out, p)

    def integral_primitive(self) -> tuple["PlaneCubic", Fraction]:
        """(G, s) with G = s*C having coprime integer coefficients."""
        fr = [Fraction(c) for c in self.coeffs]
        den = reduce(lcm, (c.denominator for c in fr), 1)
        ints = [int(c * den) for c in fr]
        g = reduce(gcd, ints, 0)
        return PlaneCubic([c // g for c in ints]), Fraction(den, g)

    def scale(self, s) -> "PlaneCubic":
        return PlaneCubic([s * c for c in self.coeffs], self.p)

    def substitute(self, matrix) -> "PlaneCubic":
        """F(M (x, y, z)^T): the cubic pulled back along a linear map."""
        x, y, z = MultiPoly.gens(XYZ)
        lin = [sum((matrix[i][j] * g for j, g in enumerate((x, y, z))), MultiPoly(XYZ)) for i in range(3)]
        F = self.as_multipoly()
        G = F.subs(dict(zip(XYZ, lin)))
        coeffs = [G.terms.get(m, 0) for m in MONOMIALS]
        if self.field is not None:
            coeffs = [self.field(c) if isinstance(c, int) else c for c in coeffs]
        return PlaneCubic(coeffs, self.p)


class ProjPoint:
    """A point of P^2 stored with first nonzero coordinate equal to 1."""

    __slots__ = ("coords", "p")

    def __init__(self, coords: Sequence, p: int | None = None):
        coords = list(coords)
        if len(coords) != 3:
            raise ValueError("projective plane points have three coordinates")
        if p:
            coords = [int(c) % p for c in coords]
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise ValueError("(0:0:0) is not a projective point")
        if p:
            inv = pow(lead, -1, p)
            coords = [c * inv % p for c in coords]
        elif isinstance(lead, FqElem):
            inv = lead.inverse()
            coords = [lead.field(c) * inv for c in coords]
        else:
            coords = [Fraction(c) / lead for c in coords]
            coords = [c.numerator if c.denominator == 1 else c for c in coords]
        self.coords = tuple(coords)
        self.p = p

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"

    def sort_key(self):
        return tuple(c.index() if isinstance(c, FqElem) else c for c in self.coords)

    def in_prime_field(self) -> bool:
        return all(not isinstance(c, FqElem) or c.in_prime_field() for c in self.coords)


def projective_points(p: int):
    """P^2(F_p) in the fixed scan order: (1:a:b), then (0:1:b), then (0:0:1)."""
    for a in range(p):
        for b in range(p):
            yield (1, a, b)
    for b in range(p):
        yield (0, 1, b)
    yield (0, 0, 1)
