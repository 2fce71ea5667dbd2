"""Value types shared by the engine and the CLI: mu specifications, the
undefined marker and exact-to-decimal rendering."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Union


class Undefined:
    """Result of conditioning on zero mass at an exact mu."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNDEFINED"

    __str__ = __repr__

    def __bool__(self):
        return False


UNDEFINED = Undefined()

Probability = Union[Fraction, Undefined]


@dataclass(frozen=True)
class MuSpec:
    """``kind`` is ``"exact"``, ``"one"`` or ``"limit"``; ``value`` only for exact."""

    kind: str
    value: Fraction | None = None

    def __post_init__(self):
        if self.kind not in ("exact", "one", "limit"):
            raise ValueError(f"unknown mu kind {self.kind!r}")
        if self.kind == "exact":
            if self.value is None:
                raise ValueError("exact mu needs a value")
            v = Fraction(self.value)
            if not 0 <= v <= 1:
                raise ValueError(f"mu must lie in [0, 1], got {v}")
            object.__setattr__(self, "value", v)
        elif self.value is not None:
            raise ValueError(f"mu kind {self.kind!r} takes no value")

    @classmethod
    def exact(cls, value) -> "MuSpec":
        if isinstance(value, float):
            value = Fraction(str(value))
        return cls("exact", Fraction(value))

    def __str__(self):
        if self.kind == "exact":
            return _fmt_fraction(self.value)
        return "1" if self.kind == "one" else "limit"


ONE = MuSpec("one")
LIMIT = MuSpec("limit")


def parse_mu(text: str) -> MuSpec:
    """``1`` -> ONE, ``limit`` -> LIMIT, otherwise a rational or decimal literal."""
    t = text.strip()
    if t == "1":
        return ONE
    if t.lower() in ("limit", "lim", "->1"):
        return LIMIT
    try:
        value = Fraction(t)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot read mu from {text!r}") from None
    return MuSpec.exact(value)


def _fmt_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def format_exact(p: Probability) -> str:
    if isinstance(p, Undefined):
        return "UNDEFINED"
    return _fmt_fraction(Fraction(p))


def format_decimal(p: Probability, digits: int = 6) -> str:
    """Round half-to-even at ``digits`` places; display only."""
    if isinstance(p, Undefined):
        return "UNDEFINED"
    p = Fraction(p)
    with localcontext() as ctx:
        ctx.prec = max(50, digits + 30)
        d = Decimal(p.numerator) / Decimal(p.denominator)
        return str(d.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN))
