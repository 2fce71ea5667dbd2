from fractions import Fraction

import pytest
from hypothesis import strategies as st

from genlogic.dataset import ModelDistribution
from genlogic.logic import BOTTOM, TOP, And, Atom, Iff, Implies, Language, Not, Or

RAIN_WET = Language(("rain", "wet"))


def dist_of(*values) -> ModelDistribution:
    return ModelDistribution.of(RAIN_WET, [str(v) for v in values])


@pytest.fixture
def lang():
    return RAIN_WET


@pytest.fixture
def fig3_dist():
    return dist_of("0.4", "0.2", "0.1", "0.3")


@pytest.fixture
def table2_dist():
    return dist_of("0.5", "0.2", "0", "0.3")


@pytest.fixture
def example4_dist():
    return dist_of("0.9", "0.1", "0", "0")


def formulas(atoms=("a", "b", "c"), max_leaves=12):
    leaf = st.one_of(st.sampled_from([Atom(a) for a in atoms]), st.just(TOP), st.just(BOTTOM))

    def extend(children):
        return st.one_of(
            children.map(Not),
            *(st.tuples(children, children).map(lambda t, op=op: op(*t))
              for op in (And, Or, Implies, Iff)),
        )

    return st.recursive(leaf, extend, max_leaves=max_leaves)


@st.composite
def distributions(draw, lang=Language(("a", "b", "c")), allow_zero=True):
    lo = 0 if allow_zero else 1
    counts = draw(st.lists(st.integers(lo, 5), min_size=lang.n_models, max_size=lang.n_models))
    if not any(counts):
        counts[draw(st.integers(0, lang.n_models - 1))] = 1
    total = sum(counts)
    return ModelDistribution(lang, tuple(Fraction(c, total) for c in counts))


# --- acceptance summary -----------------------------------------------------

_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome.upper()))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        verdict = "PASS" if outcome == "PASSED" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
