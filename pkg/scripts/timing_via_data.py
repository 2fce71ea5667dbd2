"""Time the row-scan conditional on growing random datasets over 16 atoms."""

import argparse
import random
import time

from genlogic.dataset import Dataset
from genlogic.engine import conditional_via_data
from genlogic.logic import Language, parse_formula


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="25000,50000,100000,200000,400000")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    lang = Language(tuple(f"a{i}" for i in range(16)))
    alpha = parse_formula("a6 <-> a7", lang)
    delta = [parse_formula(t, lang) for t in ("a0 | a1", "a2 -> a3", "!(a4 & a5)")]
    rng = random.Random(args.seed)

    print("K,seconds,us_per_row,value")
    for K in map(int, args.sizes.split(",")):
        ds = Dataset.from_models(lang, (rng.randrange(lang.n_models) for _ in range(K)))
        best = float("inf")
        for _ in range(args.repeats):
            start = time.perf_counter()
            value = conditional_via_data(alpha, delta, ds)
            best = min(best, time.perf_counter() - start)
        print(f"{K},{best:.4f},{best / K * 1e6:.3f},{value}")


if __name__ == "__main__":
    main()
