"""Univariate polynomials with natural-number coefficients, exact arithmetic.

These act as the oracle semantics of one-variable diagram polynomials on the
one-element poset: the coefficient of X^m counts the fibres of size m.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CountingPoly:
    coeffs: tuple  # sorted (exponent, coefficient) pairs, coefficients > 0

    def __init__(self, coeffs=()):
        if isinstance(coeffs, dict):
            items = coeffs.items()
        else:
            items = coeffs
        acc = {}
        for exp, c in items:
            if exp < 0 or c < 0:
                raise ValueError("exponents and coefficients must be natural")
            if c:
                acc[exp] = acc.get(exp, 0) + c
        object.__setattr__(self, "coeffs",
                           tuple(sorted((e, c) for e, c in acc.items() if c)))

    @classmethod
    def zero(cls) -> "CountingPoly":
        return cls()

    @classmethod
    def one(cls) -> "CountingPoly":
        return cls([(0, 1)])

    @classmethod
    def x(cls) -> "CountingPoly":
        return cls([(1, 1)])

    def coefficient(self, exp: int) -> int:
        for e, c in self.coeffs:
            if e == exp:
                return c
        return 0

    def degree(self) -> int:
        return self.coeffs[-1][0] if self.coeffs else 0

    def __add__(self, other: "CountingPoly") -> "CountingPoly":
        return CountingPoly(list(self.coeffs) + list(other.coeffs))

    def __mul__(self, other: "CountingPoly") -> "CountingPoly":
        return CountingPoly([(e1 + e2, c1 * c2)
                             for e1, c1 in self.coeffs
                             for e2, c2 in other.coeffs])

    def __pow__(self, n: int) -> "CountingPoly":
        out = CountingPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def substitute(self, inner: "CountingPoly") -> "CountingPoly":
        """self(inner(X)), expanded exactly."""
        out = CountingPoly.zero()
        for e, c in self.coeffs:
            out = out + CountingPoly([(0, c)]) * (inner ** e)
        return out

    def __call__(self, n: int) -> int:
        return sum(c * n ** e for e, c in self.coeffs)

    def pairs(self) -> list:
        """[[exponent, coefficient], ...] ascending, for JSON output."""
        return [[e, c] for e, c in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in reversed(self.coeffs):
            if e == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else str(c)
                parts.append(f"{head}X" if e == 1 else f"{head}X^{e}")
        return " + ".join(parts)


def formal_derivative(poly: CountingPoly) -> CountingPoly:
    """Power rule: c·X^m ↦ m·c·X^(m-1)."""
    return CountingPoly([(e - 1, e * c) for e, c in poly.coeffs if e >= 1])
