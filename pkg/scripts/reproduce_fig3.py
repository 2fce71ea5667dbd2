"""Write the p(rain | rain, wet, !wet) curve on a fine mu grid as CSV.

The numeric column at mu = 1 - 10**-k is appended so the approach to the
limit can be eyeballed next to the exact values.
"""

import argparse
import sys

from genlogic.dataset import model_distribution
from genlogic.engine import parse_grid, sweep
from genlogic.logic import Atom, Not
from genlogic.oracle import numeric_limit
from genlogic.reproduce import load_fixture, sweep_csv


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--grid", default="0:1:0.01")
    parser.add_argument("--exact", action="store_true")
    parser.add_argument("--out", help="output file (default stdout)")
    args = parser.parse_args(argv)

    dist = model_distribution(load_fixture("fig3.csv"))
    rain, wet = Atom("rain"), Atom("wet")
    delta = [rain, wet, Not(wet)]
    text = sweep_csv(sweep(rain, delta, dist, parse_grid(args.grid)), exact=args.exact)

    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for mu, value in numeric_limit(rain, delta, dist, range(1, 9)):
        print(f"# mu={mu!r} p={value:.10f}", file=sys.stderr)


if __name__ == "__main__":
    main()
