"""The generative reasoning model p(L, M, D; mu).

Given a model ``m`` each formula is true with probability ``mu`` when ``m``
satisfies it and ``1 - mu`` otherwise, independently across formulas.  The
premise set therefore contributes ``mu**a * (1 - mu)**b`` per model, where
``a`` counts the premises true in ``m`` and ``b`` the rest.

Three evaluation regimes are supported: an exact rational mu (``0**0 == 1``),
mu = 1 and the limit mu -> 1.  The limit is taken by keeping only the
positive-mass models with the fewest violated premises; those dominate both
numerator and denominator as ``1 - mu`` vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .dataset import Dataset, DatasetError, ModelDistribution
from .logic import Formula, Model, compile_formula, formula_set, model_set, truth_mask
from .mupoly import MU, ONE_MINUS_MU, Polynomial, RationalFunction, polysum
from .probability import LIMIT, ONE, UNDEFINED, MuSpec, Probability


@dataclass(frozen=True)
class WeightTerm:
    model: int
    coefficient: Fraction
    mu_exp: int
    one_minus_mu_exp: int

    def at(self, mu: Fraction) -> Fraction:
        return self.coefficient * mu**self.mu_exp * (1 - mu) ** self.one_minus_mu_exp

    def polynomial(self) -> Polynomial:
        return self.coefficient * MU**self.mu_exp * ONE_MINUS_MU**self.one_minus_mu_exp


def likelihood(f: Formula, m: Model, mu) -> Fraction:
    mu = Fraction(mu)
    return mu if truth_mask(f, m.lang) >> m.index & 1 else 1 - mu


def _true_counts(delta: Sequence[Formula], dist: ModelDistribution) -> list[int]:
    """Number of premises satisfied by each model."""
    lang = dist.lang
    counts = [0] * lang.n_models
    for beta in delta:
        mask = truth_mask(beta, lang)
        for j in range(lang.n_models):
            if mask >> j & 1:
                counts[j] += 1
    return counts


def set_weight(delta: Iterable[Formula], m: Model, dist: ModelDistribution) -> WeightTerm:
    delta = formula_set(delta)
    a = sum(1 for beta in delta if truth_mask(beta, m.lang) >> m.index & 1)
    return WeightTerm(m.index, dist[m.index], a, len(delta) - a)


def weight_terms(delta: Iterable[Formula], dist: ModelDistribution) -> list[WeightTerm]:
    delta = formula_set(delta)
    counts = _true_counts(delta, dist)
    return [
        WeightTerm(j, dist[j], counts[j], len(delta) - counts[j])
        for j in range(dist.lang.n_models)
    ]


def marginal_polynomial(f: Formula, dist: ModelDistribution) -> Polynomial:
    """Marginal probability of ``f`` as ``c0 + c1*mu``."""
    mask = truth_mask(f, dist.lang)
    sat = sum((p for j, p in enumerate(dist.probs) if mask >> j & 1), Fraction(0))
    # sat*mu + (1 - sat)*(1 - mu)
    return Polynomial((1 - sat, 2 * sat - 1))


def marginal(f: Formula, dist: ModelDistribution, mu: MuSpec) -> Fraction:
    poly = marginal_polynomial(f, dist)
    if mu.kind == "exact":
        return poly(mu.value)
    # a polynomial is continuous, so mu = 1 and mu -> 1 coincide
    return poly(Fraction(1))


def conditional(
    alpha: Formula, delta: Iterable[Formula], dist: ModelDistribution, mu: MuSpec
) -> Probability:
    """p(alpha | delta) under the given mu regime."""
    delta = formula_set(delta)
    lang = dist.lang
    alpha_mask = truth_mask(alpha, lang)
    if mu.kind == "one":
        support = model_set(delta, lang) & dist.support
        den = sum((dist[j] for j in support), Fraction(0))
        if den == 0:
            return UNDEFINED
        num = sum((dist[j] for j in support if alpha_mask >> j & 1), Fraction(0))
        return num / den
    terms = weight_terms(delta, dist)
    if mu.kind == "limit":
        live = [t for t in terms if t.coefficient != 0]
        least = min(t.one_minus_mu_exp for t in live)
        top = [t for t in live if t.one_minus_mu_exp == least]
        den = sum(t.coefficient for t in top)
        num = sum(t.coefficient for t in top if alpha_mask >> t.model & 1)
        return Fraction(num) / den
    x = mu.value
    num = Fraction(0)
    den = Fraction(0)
    for t in terms:
        w = t.at(x)
        den += w
        num += w * (x if alpha_mask >> t.model & 1 else 1 - x)
    if den == 0:
        return UNDEFINED
    return num / den


def conditional_rational_function(
    alpha: Formula, delta: Iterable[Formula], dist: ModelDistribution
) -> RationalFunction:
    """p(alpha | delta) as an unreduced ratio of polynomials in mu."""
    alpha_mask = truth_mask(alpha, dist.lang)
    terms = weight_terms(delta, dist)
    den = polysum(t.polynomial() for t in terms)
    num = polysum(
        t.polynomial() * (MU if alpha_mask >> t.model & 1 else ONE_MINUS_MU)
        for t in terms
    )
    return RationalFunction(num, den)


def conditional_via_data(alpha: Formula, delta: Iterable[Formula], ds: Dataset) -> Probability:
    """p(alpha | delta) at mu = 1 by a single pass over the data rows.

    Only the rows are visited; nothing of size 2**n is built.
    """
    if not ds.rows:
        raise DatasetError("empty dataset")
    lang = ds.lang
    premises = [compile_formula(beta, lang) for beta in formula_set(delta)]
    query = compile_formula(alpha, lang)
    num = den = 0
    for index, weight in ds.rows:
        if all(beta(index) for beta in premises):
            den += weight
            if query(index):
                num += weight
    if den == 0:
        return UNDEFINED
    return Fraction(num, den)


@dataclass(frozen=True)
class SweepPoint:
    mu: Fraction
    value: Probability
    limit: Probability | None = None


def sweep(
    alpha: Formula,
    delta: Iterable[Formula],
    dist: ModelDistribution,
    grid: Iterable,
) -> list[SweepPoint]:
    """Exact conditional along a grid of mu; the mu = 1 point also carries the limit."""
    delta = formula_set(delta)
    points = []
    for x in grid:
        spec = MuSpec.exact(x)
        value = conditional(alpha, delta, dist, spec)
        limit = conditional(alpha, delta, dist, LIMIT) if spec.value == 1 else None
        points.append(SweepPoint(spec.value, value, limit))
    return points


def parse_grid(text: str) -> list[Fraction]:
    """``start:stop:step`` with both ends inclusive, read exactly."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must look like start:stop:step, got {text!r}")
    start, stop, step = (Fraction(p.strip()) for p in parts)
    if step <= 0:
        raise ValueError("grid step must be positive")
    if not (0 <= start <= stop <= 1):
        raise ValueError("grid must lie within [0, 1]")
    out = []
    x = start
    while x <= stop:
        out.append(x)
        x += step
    return out


__all__ = [
    "LIMIT",
    "ONE",
    "MuSpec",
    "SweepPoint",
    "WeightTerm",
    "conditional",
    "conditional_rational_function",
    "conditional_via_data",
    "likelihood",
    "marginal",
    "marginal_polynomial",
    "parse_grid",
    "set_weight",
    "sweep",
    "weight_terms",
]
