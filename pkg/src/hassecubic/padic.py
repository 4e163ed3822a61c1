"""Truncated p-adic integers and Newton-Hensel lifting of univariate roots."""
from __future__ import annotations

from dataclasses import dataclass, field

from .exactnum import is_prime
from .polyring.unipoly import UniPoly

DEFAULT_PRECISION = 8
MAX_PRECISION = 4096


class SlopeConditionFailed(ValueError):
    def __init__(self, val_f: float, val_df: float):
        super().__init__(f"need v(f(a0)) > 2 v(f'(a0)); got v(f(a0))={val_f}, v(f'(a0))={val_df}")
        self.val_f = val_f
        self.val_df = val_df


class PrecisionExhausted(ValueError):
    pass


@dataclass(frozen=True)
class AtLeastPrecision:
    """Valuation of a residue that is zero at the working precision."""

    n: int

    def __str__(self):
        return f">={self.n}"


def vp_int(n: int, p: int, cap: int | None = None) -> int | float:
    """p-adic valuation of an integer; ``inf`` for zero unless ``cap`` is given."""
    if n == 0:
        return cap if cap is not None else float("inf")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
        if cap is not None and v >= cap:
            return cap
    return v


@dataclass(frozen=True)
class PadicInt:
    p: int
    N: int
    residue: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("precision must be positive")
        object.__setattr__(self, "residue", self.residue % self.p**self.N)

    @classmethod
    def from_int(cls, n: int, p: int, N: int = DEFAULT_PRECISION) -> "PadicInt":
        return cls(p, N, n)

    def _check(self, other):
        if isinstance(other, int):
            return PadicInt(self.p, self.N, other)
        if other.p != self.p:
            raise ValueError("different primes")
        return other

    def __add__(self, other):
        other = self._check(other)
        return PadicInt(self.p, min(self.N, other.N), self.residue + other.residue)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return PadicInt(self.p, min(self.N, other.N), self.residue - other.residue)

    def __neg__(self):
        return PadicInt(self.p, self.N, -self.residue)

    def __mul__(self, other):
        other = self._check(other)
        return PadicInt(self.p, min(self.N, other.N), self.residue * other.residue)

    __rmul__ = __mul__

    def valuation(self) -> int | AtLeastPrecision:
        if self.residue == 0:
            return AtLeastPrecision(self.N)
        return vp_int(self.residue, self.p)

    def digits(self) -> list[int]:
        out, r = [], self.residue
        for _ in range(self.N):
            r, d = divmod(r, self.p)
            out.append(d)
        return out


def valuation(x: PadicInt) -> int | AtLeastPrecision:
    return x.valuation()


@dataclass(frozen=True)
class LiftCertificate:
    prime: int
    coefficients: tuple[int, ...]
    a0: int
    val_f_a0: int
    val_df_a0: int
    residue: int
    N: int
    steps: tuple[int, ...] = field(default=())

    @property
    def point(self) -> PadicInt:
        return PadicInt(self.prime, self.N, self.residue)

    def replay(self) -> bool:
        """Re-run the Newton iteration and re-check the final residue."""
        f = UniPoly(self.coefficients)
        again = hensel_lift(f, self.prime, self.a0, self.N)
        return again.residue == self.residue and vp_int(f(self.residue), self.prime, self.N) >= self.N

    def as_dict(self) -> dict:
        return {
            "prime": self.prime,
            "a0": str(self.a0),
            "v_f_a0": self.val_f_a0,
            "v_df_a0": self.val_df_a0,
            "residue": str(self.residue),
            "precision": self.N,
            "newton_steps": len(self.steps),
        }


def hensel_lift(f: UniPoly, p: int, a0: int, N: int = DEFAULT_PRECISION) -> LiftCertificate:
    """Lift an approximate root of an integer polynomial to precision p^N.

    Requires v(f(a0)) > 2 v(f'(a0)).  The result is congruent to a0 modulo
    p^(v(f'(a0)) + 1) and satisfies v(f(a)) >= N.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if N > MAX_PRECISION:
        raise PrecisionExhausted(f"precision {N} exceeds {MAX_PRECISION}")
    coeffs = tuple(int(c) for c in f.coeffs)
    f = UniPoly(coeffs, f.var)
    df = f.derivative()
    fa, dfa = f(a0), df(a0)
    vf, vdf = vp_int(fa, p), vp_int(dfa, p)
    if not vf > 2 * vdf:
        raise SlopeConditionFailed(vf, vdf)
    e = vdf
    work = p ** (2 * N + 2 * e + 2)
    a = a0
    steps = []
    v = vf
    while v < N:
        fa, dfa = f(a), df(a)
        unit = dfa // p**e
        if vp_int(dfa, p) != e:
            raise AssertionError("derivative valuation changed during Newton iteration")
        # f(a) is divisible by p^e because v > 2e >= e
        step = (fa // p**e) * pow(unit, -1, work) % work
        a = (a - step) % work
        steps.append(a)
        v_new = vp_int(f(a), p, N)
        if v_new < min(2 * v - 2 * e, N):
            raise AssertionError("Newton iteration failed to converge quadratically")
        v = v_new
    residue = a % p**N
    if vp_int(f(residue), p, N) < N:
        raise AssertionError("lifted residue does not reach the requested precision")
    return LiftCertificate(p, coeffs, a0, vf if vf != float("inf") else N, vdf, residue, N, tuple(steps))
