"""Count regimes over every premise subset of a small formula pool.

For each distribution, prints how many subsets land in each regime and
how many (premises, query) pairs hold under each consequence relation.
"""

import argparse
from collections import Counter
from itertools import combinations

from genlogic.consequence import (
    REGIMES,
    classical_entails,
    classify_regime,
    empirical_entails,
    para_entails,
)
from genlogic.dataset import ModelDistribution
from genlogic.logic import Language, parse_formula

POOL = ("rain", "!rain", "wet", "!wet", "rain -> wet", "rain & !wet")
QUERIES = ("rain", "wet", "!wet", "rain -> wet", "rain | wet", "rain <-> wet")
DISTS = {
    "uniform": ("0.25", "0.25", "0.25", "0.25"),
    "table1": ("0.4", "0.2", "0.1", "0.3"),
    "table2": ("0.5", "0.2", "0", "0.3"),
    "example4": ("0.9", "0.1", "0", "0"),
    "point-m3": ("0", "0", "1", "0"),
}


def census(dist: ModelDistribution, pool, queries):
    regimes, relations = Counter(), Counter()
    for r in range(len(pool) + 1):
        for delta in combinations(pool, r):
            regimes[classify_regime(delta, dist).regime] += 1
            for alpha in queries:
                relations["classical"] += classical_entails(delta, alpha, dist.lang)
                relations["empirical"] += empirical_entails(delta, alpha, dist)
                relations["mcs"] += para_entails(delta, alpha, "mcs", lang=dist.lang)
                relations["mps"] += para_entails(delta, alpha, "mps", dist=dist)
    return regimes, relations


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.parse_args(argv)
    lang = Language(("rain", "wet"))
    pool = [parse_formula(t, lang) for t in POOL]
    queries = [parse_formula(t, lang) for t in QUERIES]
    print("dist," + ",".join(REGIMES) + ",classical,empirical,mcs,mps")
    for name, values in DISTS.items():
        regimes, relations = census(ModelDistribution.of(lang, values), pool, queries)
        row = [regimes[k] for k in REGIMES] + [relations[k] for k in ("classical", "empirical", "mcs", "mps")]
        print(name + "," + ",".join(map(str, row)))


if __name__ == "__main__":
    main()
