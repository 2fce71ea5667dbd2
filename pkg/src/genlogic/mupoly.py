"""Exact polynomials and rational functions in the Bernoulli parameter mu."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .probability import UNDEFINED, Undefined


@dataclass(frozen=True)
class Polynomial:
    """``coeffs[i]`` is the coefficient of ``mu**i``; trailing zeros are dropped."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def const(cls, c) -> "Polynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _lift(self, other) -> "Polynomial":
        return other if isinstance(other, Polynomial) else Polynomial.const(other)

    def __add__(self, other) -> "Polynomial":
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._lift(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        result = Polynomial.const(1)
        for _ in range(k):
            result = result * self
        return result

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            num = f"{mag.numerator}/{mag.denominator}"
            term = num if i == 0 else f"{num}*mu" + (f"^{i}" if i > 1 else "")
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)


MU = Polynomial((0, 1))
ONE_MINUS_MU = Polynomial((1, -1))


def polysum(terms: Iterable[Polynomial]) -> Polynomial:
    total = Polynomial()
    for t in terms:
        total = total + t
    return total


@dataclass(frozen=True)
class RationalFunction:
    numerator: Polynomial
    denominator: Polynomial

    def __call__(self, x) -> Fraction | Undefined:
        den = self.denominator(x)
        if den == 0:
            return UNDEFINED
        return self.numerator(x) / den

    def same_as(self, other: "RationalFunction") -> bool:
        """Equality as rational functions (cross-multiplied)."""
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"
