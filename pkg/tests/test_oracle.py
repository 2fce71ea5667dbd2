import random
from fractions import Fraction

import pytest

from genlogic.consequence import SubsetCapExceeded, mcs_models, mps_models
from genlogic.dataset import Dataset, model_distribution
from genlogic.engine import conditional
from genlogic.logic import TOP, Atom, Language, Not, parse_formula
from genlogic.oracle import (
    enum_maximal_consistent,
    enum_maximal_possible,
    enum_mcs,
    enum_mps,
    joint_conditional,
    joint_table,
    limit_via_mps,
    mcs_model_indices,
    mps_model_indices,
    numeric_limit,
)
from genlogic.probability import LIMIT, UNDEFINED, MuSpec
from genlogic.reproduce import load_fixture

from randinst import random_instance

rain, wet = Atom("rain"), Atom("wet")
EX_DELTA = [parse_formula(t) for t in ("rain", "wet", "rain -> wet", "!wet")]


def P(*texts):
    return frozenset(parse_formula(t) for t in texts)


class TestJointTable:
    def test_normalised_and_marginal(self):
        ds = load_fixture("table1_rows.csv")
        table = joint_table([rain, wet, parse_formula("rain -> wet")], ds, Fraction(2, 3))
        assert table.total() == 1
        md = table.model_datum_marginal()
        assert len(md) == ds.K
        assert all(p == Fraction(1, ds.K) for p in md.values())

    def test_random_normalisation(self):
        rng = random.Random(21)
        for _ in range(50):
            _, alpha, delta, ds, _ = random_instance(rng)
            assert joint_table([alpha, *delta], ds, Fraction(rng.randint(0, 7), 7)).total() == 1

    def test_fig3_at_half(self):
        ds = load_fixture("fig3.csv")
        assert joint_conditional(rain, [rain, wet, Not(wet)], ds, Fraction(1, 2)) == Fraction(1, 2)
        assert joint_conditional(rain, [rain, wet, Not(wet)], ds, 1) is UNDEFINED

    def test_self_premise_positive(self):
        ds = Dataset.from_counts(Language(("a", "b")), [1, 2, 3, 4])
        a = Atom("a")
        mu = Fraction(3, 4)
        expected = conditional(a, [a], model_distribution(ds), MuSpec.exact(mu))
        assert joint_conditional(a, [a], ds, mu) == expected

    def test_empty_delta_is_marginal(self):
        ds = load_fixture("table1.csv")
        alpha = parse_formula("rain -> wet")
        assert joint_conditional(alpha, [], ds, Fraction(1, 2)) == Fraction(1, 10) + Fraction(8, 10) / 2

    def test_matches_engine(self):
        rng = random.Random(22)
        for _ in range(100):
            _, alpha, delta, ds, dist = random_instance(rng)
            mu = Fraction(rng.randint(0, 9), 9)
            assert joint_conditional(alpha, delta, ds, mu) == conditional(alpha, delta, dist, MuSpec.exact(mu))

    def test_cap(self):
        ds = load_fixture("table1.csv")
        with pytest.raises(SubsetCapExceeded):
            joint_table([rain] * 13, ds, Fraction(1, 2))


class TestEnumeration:
    def test_example3_maximal_family(self, lang):
        assert {frozenset(s) for s in enum_maximal_consistent(EX_DELTA, lang)} == {
            P("rain", "wet", "rain -> wet"), P("rain", "!wet"), P("rain -> wet", "!wet")
        }
        assert enum_mcs(EX_DELTA, lang).as_sets() == {P("rain", "wet", "rain -> wet")}

    def test_example4(self, example4_dist):
        assert {frozenset(s) for s in enum_maximal_possible(EX_DELTA, example4_dist)} == {
            P("wet", "rain -> wet"), P("rain -> wet", "!wet")
        }
        assert enum_mps(EX_DELTA, example4_dist).as_sets() == {P("wet", "rain -> wet"), P("rain -> wet", "!wet")}

    def test_empty(self, lang, table2_dist):
        assert enum_mcs([], lang).subsets() == [()]
        assert enum_mps([], table2_dist).subsets() == [()]

    def test_cap(self, lang):
        with pytest.raises(SubsetCapExceeded):
            enum_mcs([parse_formula(f"rain | {'!' * i}wet") for i in range(13)], lang)

    def test_model_unions_match(self, lang, example4_dist, fig3_dist):
        assert mcs_model_indices(EX_DELTA, lang) == set(mcs_models(EX_DELTA, lang)) == {3}
        assert mps_model_indices(EX_DELTA, example4_dist) == set(mps_models(EX_DELTA, example4_dist)) == {0, 1}
        assert limit_via_mps(rain, [rain, wet, Not(wet)], fig3_dist) == 1


class TestNumericLimit:
    def test_self_premise_tends_to_one(self, fig3_dist):
        # below 1 for every mu < 1: alpha's own factor contributes mu
        values = [v for _, v in numeric_limit(wet, [wet], fig3_dist, range(1, 9))]
        errs = [1 - v for v in values]
        assert all(0 <= b < a for a, b in zip(errs, errs[1:]))
        assert errs[-1] < 1e-7
        only_wet = Dataset.from_counts(Language(("rain", "wet")), [0, 3, 0, 1])
        for mu, v in numeric_limit(wet, [wet], model_distribution(only_wet), range(1, 9)):
            assert v == pytest.approx(mu, abs=1e-12)

    def test_table2_row1_approaches_half(self, table2_dist):
        values = numeric_limit(wet, [rain, Not(rain)], table2_dist, [3, 6, 8])
        assert conditional(wet, [rain, Not(rain)], table2_dist, LIMIT) == Fraction(1, 2)
        assert abs(values[-1][1] - 0.5) < 1e-2

    def test_top(self, fig3_dist):
        [(mu, v)] = numeric_limit(TOP, [], fig3_dist, [3])
        assert v == pytest.approx(mu)
