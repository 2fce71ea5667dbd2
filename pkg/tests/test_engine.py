import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genlogic.dataset import Dataset, DatasetError, model_distribution
from genlogic.engine import (
    WeightTerm,
    conditional,
    conditional_rational_function,
    conditional_via_data,
    likelihood,
    marginal,
    marginal_polynomial,
    parse_grid,
    set_weight,
    sweep,
    weight_terms,
)
from genlogic.logic import TOP, Atom, Language, Model, Not, parse_formula
from genlogic.mupoly import MU, ONE_MINUS_MU, Polynomial, RationalFunction
from genlogic.oracle import numeric_limit
from genlogic.probability import LIMIT, ONE, UNDEFINED, MuSpec, format_decimal, parse_mu
from genlogic.reproduce import load_fixture

from conftest import RAIN_WET, dist_of, distributions, formulas
from randinst import random_instance

rain, wet = Atom("rain"), Atom("wet")
m = {i + 1: Model(RAIN_WET, i) for i in range(4)}
FIG3_DELTA = [rain, wet, Not(wet)]


def printed_fig3_curve() -> RationalFunction:
    """The expansion written out for p(rain | rain, wet, !wet)."""
    a, b = Fraction(6, 10), Fraction(4, 10)
    num = a * MU * ONE_MINUS_MU**3 + b * MU**3 * ONE_MINUS_MU
    den = a * MU * ONE_MINUS_MU**2 + b * MU**2 * ONE_MINUS_MU
    return RationalFunction(num, den)


def limit_at_one(rf: RationalFunction) -> Fraction:
    """Cancel common (1 - mu) factors, then substitute mu = 1."""
    num, den = list(rf.numerator.coeffs), list(rf.denominator.coeffs)

    def divide_by_root_one(cs):
        # synthetic division by (mu - 1); assumes p(1) == 0
        out = [Fraction(0)] * (len(cs) - 1)
        carry = Fraction(0)
        for i in range(len(cs) - 1, 0, -1):
            carry = cs[i] + carry
            out[i - 1] = carry
        return out

    while sum(den) == 0:
        assert sum(num) == 0
        num, den = divide_by_root_one(num), divide_by_root_one(den)
    return sum(num) / sum(den)


class TestLikelihood:
    def test_violated_implication(self):
        mu = Fraction(3, 10)
        assert likelihood(parse_formula("rain -> wet"), m[3], mu) == 1 - mu

    def test_top(self):
        assert all(likelihood(TOP, m[i], Fraction(1, 7)) == Fraction(1, 7) for i in m)

    def test_conjunction(self):
        assert likelihood(parse_formula("rain & wet"), m[4], Fraction(3, 4)) == Fraction(3, 4)


class TestSetWeight:
    def test_fig3_premises_m4(self, fig3_dist):
        assert set_weight(FIG3_DELTA, m[4], fig3_dist) == WeightTerm(3, Fraction(3, 10), 2, 1)

    def test_empty(self, fig3_dist):
        for i in m:
            t = set_weight([], m[i], fig3_dist)
            assert (t.mu_exp, t.one_minus_mu_exp) == (0, 0)
            assert t.coefficient == fig3_dist[i - 1]

    def test_contradiction(self, table2_dist):
        t = set_weight([rain, Not(rain)], m[1], table2_dist)
        assert t == WeightTerm(0, Fraction(1, 2), 1, 1)

    def test_dedup(self, fig3_dist):
        t = set_weight([rain, rain, wet], m[4], fig3_dist)
        assert t.mu_exp + t.one_minus_mu_exp == 2

    def test_weight_terms_match_set_weight(self, fig3_dist):
        terms = weight_terms(FIG3_DELTA, fig3_dist)
        assert terms == [set_weight(FIG3_DELTA, m[i], fig3_dist) for i in m]


class TestMarginal:
    def test_table1_polynomial(self):
        dist = model_distribution(load_fixture("table1.csv"))
        poly = marginal_polynomial(parse_formula("rain -> wet"), dist)
        assert poly == Polynomial((Fraction(1, 10), Fraction(8, 10)))
        assert marginal(parse_formula("rain -> wet"), dist, ONE) == Fraction(9, 10)
        assert marginal(parse_formula("rain -> wet"), dist, LIMIT) == Fraction(9, 10)

    def test_top_is_mu(self, fig3_dist):
        assert marginal_polynomial(TOP, fig3_dist) == MU
        assert marginal(TOP, fig3_dist, ONE) == 1

    def test_rain(self, fig3_dist):
        assert marginal(rain, fig3_dist, ONE) == Fraction(2, 5)

    @given(formulas(), distributions(), st.fractions(0, 1))
    def test_marginal_is_empty_conditional(self, f, dist, mu):
        spec = MuSpec.exact(mu)
        assert marginal(f, dist, spec) == conditional(f, [], dist, spec)


class TestConditional:
    def test_fig3_limit(self, fig3_dist):
        assert conditional(rain, FIG3_DELTA, fig3_dist, LIMIT) == 1
        assert conditional(rain, FIG3_DELTA, fig3_dist, ONE) is UNDEFINED
        assert conditional(rain, FIG3_DELTA, fig3_dist, MuSpec.exact(1)) is UNDEFINED

    def test_fig3_matches_printed_expansion(self, fig3_dist):
        rf = conditional_rational_function(rain, FIG3_DELTA, fig3_dist)
        assert rf.same_as(printed_fig3_curve())
        assert limit_at_one(printed_fig3_curve()) == 1

    def test_empty_premises(self, fig3_dist):
        for spec in (ONE, LIMIT, MuSpec.exact(Fraction(2, 3))):
            assert conditional(wet, [], fig3_dist, spec) == marginal(wet, fig3_dist, spec)

    def test_table2(self, table2_dist):
        assert conditional(wet, [rain, Not(rain)], table2_dist, ONE) is UNDEFINED
        assert conditional(wet, [rain, Not(rain)], table2_dist, LIMIT) == Fraction(1, 2)
        assert conditional(wet, [rain], table2_dist, ONE) == 1
        assert conditional(parse_formula("!rain | wet"), [], table2_dist, ONE) == 1

    def test_exact_zero(self, fig3_dist):
        # 0**0 == 1: at mu = 0 only models violating every premise carry weight
        # (m2, m4 for !wet) and alpha counts where it is false (m2)
        assert conditional(TOP, [], fig3_dist, MuSpec.exact(0)) == 0
        assert conditional(rain, [Not(wet)], fig3_dist, MuSpec.exact(0)) == Fraction(2, 5)

    def test_exact_one_equals_one(self):
        rng = random.Random(11)
        for _ in range(300):
            _, alpha, delta, _, dist = random_instance(rng)
            assert conditional(alpha, delta, dist, MuSpec.exact(1)) == conditional(alpha, delta, dist, ONE)

    def test_rational_function_agrees_with_exact(self):
        rng = random.Random(12)
        for _ in range(200):
            _, alpha, delta, _, dist = random_instance(rng)
            rf = conditional_rational_function(alpha, delta, dist)
            for x in (Fraction(1, 3), Fraction(5, 7), Fraction(0), Fraction(1)):
                assert rf(x) == conditional(alpha, delta, dist, MuSpec.exact(x))
            assert limit_at_one(rf) == conditional(alpha, delta, dist, LIMIT)

    @settings(max_examples=300)
    @given(formulas(), st.lists(formulas(max_leaves=6), max_size=4), distributions(),
           st.sampled_from([ONE, LIMIT, MuSpec.exact(Fraction(1, 3)), MuSpec.exact(Fraction(9, 10))]))
    def test_complement_law(self, alpha, delta, dist, spec):
        p = conditional(alpha, delta, dist, spec)
        q = conditional(Not(alpha), delta, dist, spec)
        if p is UNDEFINED:
            assert q is UNDEFINED
        else:
            assert p + q == 1


class TestViaData:
    def test_table1(self):
        ds = load_fixture("table1_rows.csv")
        assert conditional_via_data(parse_formula("rain -> wet"), [], ds) == Fraction(9, 10)
        assert conditional_via_data(wet, [rain], ds) == Fraction(3, 4)

    def test_self_support(self):
        ds = load_fixture("table2.csv")
        assert conditional_via_data(wet, [wet], ds) == 1
        assert conditional_via_data(wet, [rain, Not(rain)], ds) is UNDEFINED

    def test_empty(self):
        with pytest.raises(DatasetError):
            conditional_via_data(wet, [], Dataset(RAIN_WET, ()))

    def test_matches_model_path(self):
        rng = random.Random(13)
        for _ in range(300):
            _, alpha, delta, ds, dist = random_instance(rng)
            assert conditional_via_data(alpha, delta, ds) == conditional(alpha, delta, dist, ONE)


class TestSweep:
    def test_fig3_points(self, fig3_dist):
        pts = sweep(rain, FIG3_DELTA, fig3_dist, [0, Fraction(1, 2), 1])
        assert pts[0].value is UNDEFINED
        # every Bernoulli factor equals 1/2 at mu = 1/2
        assert pts[1].value == Fraction(1, 2) == printed_fig3_curve()(Fraction(1, 2))
        assert pts[2].value is UNDEFINED and pts[2].limit == 1
        assert pts[0].limit is None and pts[1].limit is None

    def test_top_at_zero(self, fig3_dist):
        assert sweep(TOP, [], fig3_dist, [0])[0].value == 0

    def test_grid(self):
        g = parse_grid("0:1:0.01")
        assert len(g) == 101 and g[0] == 0 and g[-1] == 1 and g[1] == Fraction(1, 100)
        assert parse_grid("0.5:1:1/4") == [Fraction(1, 2), Fraction(3, 4), Fraction(1)]
        for bad in ("0:1", "0:2:0.5", "0:1:0"):
            with pytest.raises(ValueError):
                parse_grid(bad)


class TestNumericConvergence:
    def test_converges_to_limit(self):
        rng = random.Random(17)
        for _ in range(100):
            _, alpha, delta, _, dist = random_instance(rng)
            target = float(conditional(alpha, delta, dist, LIMIT))
            errs = [abs(v - target) for _, v in numeric_limit(alpha, delta, dist, range(3, 9))]
            assert all(later <= earlier + 1e-12 for earlier, later in zip(errs, errs[1:]))
            assert errs[-1] < 1e-2

    def test_fig3_at_k6(self, fig3_dist):
        [(_, v)] = numeric_limit(rain, FIG3_DELTA, fig3_dist, [6])
        assert abs(v - 1) < 1e-2


class TestValues:
    def test_parse_mu(self):
        assert parse_mu("1") == ONE
        assert parse_mu("limit") == LIMIT
        assert parse_mu("0.25") == MuSpec.exact(Fraction(1, 4))
        assert parse_mu("3/4").value == Fraction(3, 4)
        for bad in ("1.5", "-0.1", "abc"):
            with pytest.raises(ValueError):
                parse_mu(bad)

    def test_decimal_rendering(self):
        assert format_decimal(Fraction(9, 10)) == "0.900000"
        assert format_decimal(Fraction(1, 3), 2) == "0.33"
        assert format_decimal(Fraction(1, 8), 2) == "0.12"  # half to even
        assert format_decimal(Fraction(3, 8), 2) == "0.38"
        assert format_decimal(UNDEFINED) == "UNDEFINED"
