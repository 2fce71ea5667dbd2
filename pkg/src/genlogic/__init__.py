"""Exact probabilistic reasoning from data over propositional formulas."""

from .consequence import (
    RegimeReport,
    SubsetFamily,
    classical_entails,
    classify_regime,
    empirical_entails,
    mcs,
    mcs_models,
    mps,
    mps_models,
    para_entails,
)
from .dataset import Dataset, DatasetError, ModelDistribution, ingest, model_distribution, possible_models
from .engine import (
    WeightTerm,
    conditional,
    conditional_rational_function,
    conditional_via_data,
    likelihood,
    marginal,
    marginal_polynomial,
    set_weight,
    sweep,
)
from .logic import (
    BOTTOM,
    TOP,
    And,
    Atom,
    Bottom,
    Formula,
    Iff,
    Implies,
    Language,
    Model,
    ModelSet,
    Not,
    Or,
    Top,
    enumerate_models,
    format_formula,
    formula_set,
    model_set,
    parse_formula,
    satisfies,
)
from .mupoly import Polynomial, RationalFunction
from .probability import LIMIT, ONE, UNDEFINED, MuSpec, Undefined, parse_mu

__version__ = "0.1.0"
