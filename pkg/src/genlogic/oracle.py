"""Naive reference implementations for cross-checking the engine.

Nothing here is on a fast path.  The joint table is built literally from
the factorisation p(formulas | m) p(m | d) p(d) and conditioned by summing
entries; subset families come from enumerating every subset of the premises.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from .consequence import SubsetCapExceeded, SubsetFamily
from .dataset import Dataset, ModelDistribution
from .logic import Formula, Language, Model, enumerate_models, formula_set, satisfies
from .probability import UNDEFINED, Probability

ENUM_CAP = 12
JOINT_CAP = 12


@dataclass(frozen=True)
class JointTable:
    """Sparse joint over (truth values of ``formulas``, model, datum).

    Keys are ``(values, model_index, datum_position)``; entries with
    p(m | d) = 0 are not stored.  ``formulas`` are separate random variables
    by position, so a formula may appear more than once.
    """

    formulas: tuple[Formula, ...]
    K: int
    entries: dict

    def total(self) -> Fraction:
        return sum(self.entries.values(), Fraction(0))

    def model_datum_marginal(self) -> dict[tuple[int, int], Fraction]:
        out: dict[tuple[int, int], Fraction] = {}
        for (_, m, d), p in self.entries.items():
            out[(m, d)] = out.get((m, d), Fraction(0)) + p
        return out

    def probability(self, fixed: dict[int, int]) -> Fraction:
        """Mass of entries whose formula values match ``fixed`` (position -> 0/1)."""
        return sum(
            (p for (vals, _, _), p in self.entries.items()
             if all(vals[i] == v for i, v in fixed.items())),
            Fraction(0),
        )


def joint_table(formulas: Sequence[Formula], ds: Dataset, mu) -> JointTable:
    if len(formulas) > JOINT_CAP:
        raise SubsetCapExceeded(f"joint table over {len(formulas)} formulas exceeds {JOINT_CAP}")
    mu = Fraction(mu)
    lang = ds.lang
    models = enumerate_models(lang)
    data = [index for index, weight in ds.rows for _ in range(weight)]
    K = len(data)
    p_d = Fraction(1, K)
    entries = {}
    for d, supported in enumerate(data):
        for m in models:
            p_m_given_d = 1 if m.index == supported else 0
            if not p_m_given_d:
                continue
            truth = [satisfies(m, f) for f in formulas]
            for vals in product((0, 1), repeat=len(formulas)):
                p = Fraction(1)
                for v, t in zip(vals, truth):
                    p *= mu if bool(v) == t else 1 - mu
                entries[(vals, m.index, d)] = p * p_m_given_d * p_d
    return JointTable(tuple(formulas), K, entries)


def joint_conditional(alpha: Formula, delta: Iterable[Formula], ds: Dataset, mu) -> Probability:
    delta = formula_set(delta)
    table = joint_table((alpha, *delta), ds, mu)
    given = {i + 1: 1 for i in range(len(delta))}
    den = table.probability(given)
    if den == 0:
        return UNDEFINED
    return table.probability({0: 1, **given}) / den


def _family(delta, ok, cap) -> tuple[SubsetFamily, list[tuple[int, ...]]]:
    delta = formula_set(delta)
    if len(delta) > cap:
        raise SubsetCapExceeded(f"{len(delta)} premises exceeds the enumeration cap of {cap}")
    n = len(delta)
    valid = [
        s for r in range(n + 1) for s in combinations(range(n), r)
        if ok([delta[i] for i in s])
    ]
    valid_sets = {frozenset(s) for s in valid}
    maximal = [
        s for s in valid
        if not any(frozenset(s) | {i} in valid_sets for i in range(n) if i not in s)
    ]
    best = max(len(s) for s in maximal)
    members = tuple(sorted(s for s in maximal if len(s) == best))
    return SubsetFamily(delta, members, best), sorted(maximal)


def _consistent(lang: Language):
    models = enumerate_models(lang)
    return lambda fs: any(all(satisfies(m, f) for f in fs) for m in models)


def _possible(dist: ModelDistribution):
    models = [m for m in enumerate_models(dist.lang) if dist[m.index] != 0]
    return lambda fs: any(all(satisfies(m, f) for f in fs) for m in models)


def enum_mcs(delta: Iterable[Formula], lang: Language, cap: int = ENUM_CAP) -> SubsetFamily:
    return _family(delta, _consistent(lang), cap)[0]


def enum_mps(delta: Iterable[Formula], dist: ModelDistribution, cap: int = ENUM_CAP) -> SubsetFamily:
    return _family(delta, _possible(dist), cap)[0]


def enum_maximal_consistent(delta, lang: Language, cap: int = ENUM_CAP) -> list[tuple[Formula, ...]]:
    """All inclusion-maximal consistent subsets, not only the largest."""
    delta = formula_set(delta)
    return [tuple(delta[i] for i in s) for s in _family(delta, _consistent(lang), cap)[1]]


def enum_maximal_possible(delta, dist: ModelDistribution, cap: int = ENUM_CAP) -> list[tuple[Formula, ...]]:
    delta = formula_set(delta)
    return [tuple(delta[i] for i in s) for s in _family(delta, _possible(dist), cap)[1]]


def _union_of_models(family: SubsetFamily, models: list[Model]) -> set[int]:
    return {
        m.index for s in family for m in models
        if all(satisfies(m, f) for f in s)
    }


def limit_via_mps(alpha: Formula, delta: Iterable[Formula], dist: ModelDistribution) -> Fraction:
    """Closed form of the mu -> 1 conditional over the possible models of the MPS family."""
    possible = [m for m in enumerate_models(dist.lang) if dist[m.index] != 0]
    star = _union_of_models(enum_mps(delta, dist), possible)
    den = sum((dist[j] for j in star), Fraction(0))
    num = sum(
        (dist[m.index] for m in possible if m.index in star and satisfies(m, alpha)),
        Fraction(0),
    )
    return num / den


def mcs_model_indices(delta, lang: Language) -> set[int]:
    return _union_of_models(enum_mcs(delta, lang), enumerate_models(lang))


def mps_model_indices(delta, dist: ModelDistribution) -> set[int]:
    possible = [m for m in enumerate_models(dist.lang) if dist[m.index] != 0]
    return _union_of_models(enum_mps(delta, dist), possible)


def _float_conditional(alpha, delta, dist: ModelDistribution, mu: float) -> float:
    delta = formula_set(delta)
    num = den = 0.0
    for m in enumerate_models(dist.lang):
        p = float(dist[m.index])
        if p == 0.0:
            continue
        w = p
        for beta in delta:
            w *= mu if satisfies(m, beta) else 1.0 - mu
        den += w
        num += w * (mu if satisfies(m, alpha) else 1.0 - mu)
    return num / den if den else float("nan")


def numeric_limit(alpha, delta, dist: ModelDistribution, ks: Iterable[int]) -> list[tuple[float, float]]:
    """Floating evaluation at mu = 1 - 10**-k; a convergence signal only."""
    out = []
    for k in ks:
        mu = 1.0 - 10.0 ** (-k)
        out.append((mu, _float_conditional(alpha, delta, dist, mu)))
    return out
