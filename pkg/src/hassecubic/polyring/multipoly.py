"""Sparse multivariate polynomials with exact coefficients.

Coefficients may be ints, Fractions, or finite-field elements; anything that
supports ``+ - *``, truthiness for zero tests, and (for exact division) either
``//`` on ints or ``/``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class ZeroPolynomial(ValueError):
    pass


def exact_div(a, b):
    """Exact quotient of ring elements; ints must divide evenly."""
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{b} does not divide {a}")
        return q
    q = a / b
    if isinstance(q, Fraction) and q.denominator == 1:
        return q.numerator
    return q


class MultiPoly:
    """Immutable sparse polynomial in an ordered tuple of variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple, object] | None = None):
        self.vars = tuple(variables)
        clean = {}
        if terms:
            n = len(self.vars)
            for exps, c in terms.items():
                if len(exps) != n:
                    raise ValueError(f"exponent {exps} does not match variables {self.vars}")
                if c:
                    clean[tuple(exps)] = c
        self.terms = clean

    # -- construction -------------------------------------------------
    @classmethod
    def const(cls, c, variables: Iterable[str]) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def gen(cls, name: str, variables: Iterable[str]) -> "MultiPoly":
        variables = tuple(variables)
        e = [0] * len(variables)
        e[variables.index(name)] = 1
        return cls(variables, {tuple(e): 1})

    @classmethod
    def gens(cls, variables: Iterable[str]) -> tuple["MultiPoly", ...]:
        variables = tuple(variables)
        return tuple(cls.gen(v, variables) for v in variables)

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        return MultiPoly.const(other, self.vars)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return MultiPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        return MultiPoly(self.vars, out)

    def __rmul__(self, other):
        return MultiPoly(self.vars, {e: other * c for e, c in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other, self.vars) if self.vars else None
            if other is None:
                return False
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)

    # -- structure ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * len(self.vars), 0)

    def degree(self, var: str | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficients_in(self, var: str) -> dict[int, "MultiPoly"]:
        """Split as sum_k c_k * var^k; the c_k keep the full variable tuple."""
        i = self.vars.index(var)
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            rest = e[:i] + (0,) + e[i + 1:]
            parts.setdefault(k, {})[rest] = c
        return {k: MultiPoly(self.vars, t) for k, t in parts.items()}

    def diff(self, var: str) -> "MultiPoly":
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[ne] = c * e[i]
        return MultiPoly(self.vars, out)

    def map_coeffs(self, f) -> "MultiPoly":
        return MultiPoly(self.vars, {e: f(c) for e, c in self.terms.items()})

    def subs(self, values: Mapping[str, object]) -> "MultiPoly":
        """Substitute scalars or MultiPolys (over the same variables) for variables."""
        idx = {self.vars.index(v): val for v, val in values.items()}
        result = MultiPoly(self.vars)
        cache: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                val = idx[i]
                cache[key] = val**k
            return cache[key]

        for e, c in self.terms.items():
            kept = tuple(0 if i in idx else k for i, k in enumerate(e))
            term = MultiPoly(self.vars, {kept: c})
            for i, k in enumerate(e):
                if i in idx and k:
                    term = term * power(i, k)
            result = result + term
        return result

    def evaluate(self, point: Mapping[str, object]):
        """Full evaluation to a coefficient-domain value."""
        total = 0
        for e, c in self.terms.items():
            v = c
            for name, k in zip(self.vars, e):
                if k:
                    v = v * point[name] ** k
            total = total + v
        return total

    def drop_to(self, variables: Iterable[str]) -> "MultiPoly":
        """Re-express over a sub-tuple of variables (absent ones must not occur)."""
        variables = tuple(variables)
        pos = [self.vars.index(v) for v in variables]
        out = {}
        for e, c in self.terms.items():
            if sum(e) != sum(e[i] for i in pos):
                raise ValueError("polynomial involves a dropped variable")
            out[tuple(e[i] for i in pos)] = c
        return MultiPoly(variables, out)

    def lift_to(self, variables: Iterable[str]) -> "MultiPoly":
        variables = tuple(variables)
        pos = [variables.index(v) for v in self.vars]
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(variables)
            for i, k in zip(pos, e):
                ne[i] = k
            out[tuple(ne)] = c
        return MultiPoly(variables, out)

    def leading(self):
        """Leading (exponent, coefficient) in lex order of ``vars``."""
        e = max(self.terms)
        return e, self.terms[e]

    def exact_quotient(self, other: "MultiPoly") -> "MultiPoly":
        """``self / other`` when the division is known to be exact."""
        other = self._coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if len(other.terms) == 1:
            (eg, cg), = other.terms.items()
            out = {}
            for e, c in self.terms.items():
                ne = tuple(a - b for a, b in zip(e, eg))
                if min(ne) < 0:
                    raise ArithmeticError("inexact monomial division")
                out[ne] = exact_div(c, cg)
            return MultiPoly(self.vars, out)
        eg, cg = other.leading()
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = max(rem)
            c = rem[e]
            ne = tuple(a - b for a, b in zip(e, eg))
            if min(ne) < 0:
                raise ArithmeticError("inexact polynomial division")
            q = exact_div(c, cg)
            quot[ne] = q
            for e2, c2 in other.terms.items():
                t = tuple(a + b for a, b in zip(ne, e2))
                v = rem.get(t, 0) - q * c2
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return MultiPoly(self.vars, quot)
