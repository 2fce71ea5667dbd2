"""Data ingestion and the empirical model distribution.

Every datum supports exactly one model, so a dataset is a multiset of model
indices.  The CSV contract is: a header of atom names with an optional
trailing ``count`` column, then body rows of 0/1 cells.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, TextIO

from .logic import Language, LogicError, ModelSet


class DatasetError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Dataset:
    """Multiset of data, one row per input line.

    ``rows`` holds ``(model_index, weight)`` pairs in input order; plain rows
    have weight 1, count-form rows carry their count.  Two datasets are equal
    when they share a language and per-model tallies.
    """

    lang: Language
    rows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple((int(i), int(w)) for i, w in self.rows))
        n = self.lang.n_models
        for index, weight in self.rows:
            if not 0 <= index < n:
                raise DatasetError(f"model index {index} out of range")
            if weight < 1:
                raise DatasetError(f"row weight must be a positive integer, got {weight}")

    @classmethod
    def from_models(cls, lang: Language, indices: Iterable[int]) -> "Dataset":
        return cls(lang, tuple((i, 1) for i in indices))

    @classmethod
    def from_counts(cls, lang: Language, counts: Sequence[int]) -> "Dataset":
        """Build from a dense tally vector; zero entries are skipped."""
        if len(counts) != lang.n_models:
            raise DatasetError("count vector length does not match the model space")
        return cls(lang, tuple((i, c) for i, c in enumerate(counts) if c))

    @property
    def K(self) -> int:
        return sum(w for _, w in self.rows)

    @property
    def counts(self) -> dict[int, int]:
        tally: Counter[int] = Counter()
        for index, weight in self.rows:
            tally[index] += weight
        return dict(sorted(tally.items()))

    def count_vector(self) -> tuple[int, ...]:
        self.lang.check_cap()
        tally = self.counts
        return tuple(tally.get(i, 0) for i in range(self.lang.n_models))

    def __eq__(self, other):
        if not isinstance(other, Dataset):
            return NotImplemented
        return self.lang == other.lang and self.counts == other.counts

    def __hash__(self):
        return hash((self.lang, tuple(self.counts.items())))


@dataclass(frozen=True)
class ModelDistribution:
    lang: Language
    probs: tuple[Fraction, ...]

    def __post_init__(self):
        probs = tuple(Fraction(p) for p in self.probs)
        object.__setattr__(self, "probs", probs)
        if len(probs) != self.lang.n_models:
            raise DatasetError(
                f"expected {self.lang.n_models} probabilities, got {len(probs)}"
            )
        if any(p < 0 or p > 1 for p in probs):
            raise DatasetError("probabilities must lie in [0, 1]")
        if sum(probs) != 1:
            raise DatasetError(f"probabilities sum to {sum(probs)}, not 1")

    @classmethod
    def of(cls, lang: Language, values: Iterable) -> "ModelDistribution":
        """Accepts Fractions, ints or decimal strings/floats (read via ``str``)."""
        return cls(lang, tuple(_exact(v) for v in values))

    def __getitem__(self, index: int) -> Fraction:
        return self.probs[index]

    @property
    def support(self) -> ModelSet:
        return ModelSet.of(len(self.lang), (i for i, p in enumerate(self.probs) if p))


def _exact(v) -> Fraction:
    if isinstance(v, float):
        return Fraction(str(v))
    return Fraction(v)


def ingest(source: TextIO | str, lang: Language | None = None) -> Dataset:
    """Read the CSV data format from a text stream (or a string)."""
    if isinstance(source, str):
        source = io.StringIO(source)
    reader = csv.reader(source)
    header = None
    for row in reader:
        if any(cell.strip() for cell in row):
            header = [cell.strip() for cell in row]
            break
    if header is None:
        raise DatasetError("missing header row")
    weighted = bool(header) and header[-1] == "count"
    names = header[:-1] if weighted else header
    try:
        file_lang = Language(tuple(names))
    except LogicError as exc:
        raise DatasetError(f"bad header: {exc}") from None
    if lang is not None and lang != file_lang:
        raise DatasetError(
            f"header atoms {list(file_lang.atoms)} do not match the language "
            f"{list(lang.atoms)}"
        )
    lang = file_lang
    width = len(header)
    rows = []
    for lineno, row in enumerate(reader, start=2):
        if not any(cell.strip() for cell in row):
            continue
        cells = [cell.strip() for cell in row]
        if len(cells) != width:
            raise DatasetError(f"line {lineno}: expected {width} cells, got {len(cells)}")
        index = 0
        for cell in cells[: len(names)]:
            if cell not in ("0", "1"):
                raise DatasetError(f"line {lineno}: non-binary cell {cell!r}")
            index = (index << 1) | (cell == "1")
        weight = 1
        if weighted:
            try:
                weight = int(cells[-1])
            except ValueError:
                weight = 0
            if weight < 1:
                raise DatasetError(f"line {lineno}: count must be a positive integer")
        rows.append((index, weight))
    if not rows:
        raise DatasetError("dataset has no rows")
    return Dataset(lang, tuple(rows))


def dump(ds: Dataset, aggregate: bool = True) -> str:
    """Render in the CSV format; count form when ``aggregate``."""
    n = len(ds.lang)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if aggregate:
        writer.writerow([*ds.lang.atoms, "count"])
        for index, count in ds.counts.items():
            writer.writerow([*_bits(index, n), count])
    else:
        writer.writerow(ds.lang.atoms)
        for index, weight in ds.rows:
            for _ in range(weight):
                writer.writerow(_bits(index, n))
    return out.getvalue()


def _bits(index: int, n: int) -> list[int]:
    return [(index >> (n - 1 - i)) & 1 for i in range(n)]


def model_distribution(ds: Dataset) -> ModelDistribution:
    """Maximum-likelihood distribution ``K_n / K``."""
    K = ds.K
    if K < 1:
        raise DatasetError("empty dataset")
    return ModelDistribution(ds.lang, tuple(Fraction(c, K) for c in ds.count_vector()))


def possible_models(dist: ModelDistribution, s: ModelSet) -> ModelSet:
    return s & dist.support
