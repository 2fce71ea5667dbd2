"""Classical, empirical, paraconsistent and parapossible consequence.

Cardinality-maximal consistent subsets are found from the models rather
than by enumerating subsets: the premises true in a model that satisfies
the most premises form such a subset, and every such subset arises that
way.  Restricting to positive-mass models gives the possible analogue.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .dataset import ModelDistribution, possible_models
from .logic import Formula, Language, LogicError, ModelSet, formula_set, model_set, models_of, truth_mask

DEFAULT_SUBSET_CAP = 20

CONSISTENT = "consistent"
POSSIBLE = "possible"
PARACONSISTENT = "paraconsistent"
PARAPOSSIBLE = "parapossible"
REGIMES = (CONSISTENT, POSSIBLE, PARACONSISTENT, PARAPOSSIBLE)


class SubsetCapExceeded(LogicError):
    pass


@dataclass(frozen=True)
class SubsetFamily:
    """Cardinality-maximal subsets of ``delta``, each as a tuple of positions."""

    delta: tuple[Formula, ...]
    members: tuple[tuple[int, ...], ...]
    cardinality: int

    def __post_init__(self):
        if any(len(s) != self.cardinality for s in self.members):
            raise ValueError("family members must share one cardinality")

    def subsets(self) -> list[tuple[Formula, ...]]:
        return [tuple(self.delta[i] for i in s) for s in self.members]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.subsets())

    def as_sets(self) -> set[frozenset[Formula]]:
        return {frozenset(s) for s in self.subsets()}

    def __str__(self) -> str:
        body = ", ".join("{" + ", ".join(str(f) for f in s) + "}" for s in self.subsets())
        return "{" + body + "}"


def classical_entails(delta: Iterable[Formula], alpha: Formula, lang: Language) -> bool:
    return model_set(delta, lang) <= models_of(alpha, lang)


def empirical_entails(delta: Iterable[Formula], alpha: Formula, dist: ModelDistribution) -> bool:
    lang = dist.lang
    return possible_models(dist, model_set(delta, lang)) <= possible_models(
        dist, models_of(alpha, lang)
    )


def _satisfied_sets(delta: Sequence[Formula], lang: Language) -> list[tuple[int, ...]]:
    masks = [truth_mask(beta, lang) for beta in delta]
    return [
        tuple(i for i, mask in enumerate(masks) if mask >> j & 1)
        for j in range(lang.n_models)
    ]


def _check_subset_cap(delta, cap):
    cap = DEFAULT_SUBSET_CAP if cap is None else cap
    if len(delta) > cap:
        raise SubsetCapExceeded(f"{len(delta)} premises exceeds the subset cap of {cap}")


def _argmax(delta, lang, candidates: ModelSet, cap):
    delta = formula_set(delta)
    _check_subset_cap(delta, cap)
    sat = _satisfied_sets(delta, lang)
    best = max(len(sat[j]) for j in candidates)
    winners = ModelSet.of(len(lang), (j for j in candidates if len(sat[j]) == best))
    members = tuple(sorted({sat[j] for j in winners}))
    return SubsetFamily(delta, members, best), winners


def mcs(delta: Iterable[Formula], lang: Language, cap: int | None = None) -> SubsetFamily:
    return _argmax(delta, lang, ModelSet.full(len(lang)), cap)[0]


def mcs_models(delta: Iterable[Formula], lang: Language, cap: int | None = None) -> ModelSet:
    return _argmax(delta, lang, ModelSet.full(len(lang)), cap)[1]


def mps(delta: Iterable[Formula], dist: ModelDistribution, cap: int | None = None) -> SubsetFamily:
    return _argmax(delta, dist.lang, dist.support, cap)[0]


def mps_models(delta: Iterable[Formula], dist: ModelDistribution, cap: int | None = None) -> ModelSet:
    return _argmax(delta, dist.lang, dist.support, cap)[1]


def para_entails(
    delta: Iterable[Formula],
    alpha: Formula,
    kind: str,
    lang: Language | None = None,
    dist: ModelDistribution | None = None,
) -> bool:
    """``kind="mcs"``: every MCS classically entails alpha.
    ``kind="mps"``: every MPS empirically entails alpha (needs ``dist``)."""
    if kind == "mcs":
        lang = lang if lang is not None else dist.lang
        return all(classical_entails(s, alpha, lang) for s in mcs(delta, lang))
    if kind == "mps":
        if dist is None:
            raise ValueError("mps entailment needs a model distribution")
        return all(empirical_entails(s, alpha, dist) for s in mps(delta, dist))
    raise ValueError(f"unknown kind {kind!r}")


def failing_subsets(delta, alpha, kind, lang=None, dist=None) -> list[tuple[Formula, ...]]:
    """Family members that do not entail ``alpha`` (empty when entailment holds)."""
    if kind == "mcs":
        lang = lang if lang is not None else dist.lang
        return [s for s in mcs(delta, lang) if not classical_entails(s, alpha, lang)]
    return [s for s in mps(delta, dist) if not empirical_entails(s, alpha, dist)]


@dataclass(frozen=True)
class RegimeReport:
    delta_consistent: bool
    delta_possible: bool
    all_models_possible: bool
    mcs_models_possible: bool
    regime: str

    def flags(self) -> dict[str, bool]:
        return {
            "delta_consistent": self.delta_consistent,
            "delta_possible": self.delta_possible,
            "all_models_possible": self.all_models_possible,
            "mcs_models_possible": self.mcs_models_possible,
        }


def classify_regime(delta: Iterable[Formula], dist: ModelDistribution) -> RegimeReport:
    """Flags for every grounding assumption and the least general regime that applies."""
    delta = formula_set(delta)
    lang = dist.lang
    models = model_set(delta, lang)
    possible = possible_models(dist, models)
    consistent = bool(models)
    all_possible = models == possible
    mcs_possible = mcs_models(delta, lang) == mps_models(delta, dist)
    if consistent and all_possible:
        regime = CONSISTENT
    elif possible:
        regime = POSSIBLE
    elif mcs_possible:
        regime = PARACONSISTENT
    else:
        regime = PARAPOSSIBLE
    return RegimeReport(consistent, bool(possible), all_possible, mcs_possible, regime)
