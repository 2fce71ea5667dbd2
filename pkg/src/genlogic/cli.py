"""Command-line interface.

Exit codes: 0 success (an undefined probability is still a success),
1 usage or parse error, 2 I/O error, 3 reproduction mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import consequence, oracle, reproduce
from .dataset import Dataset, DatasetError, ingest, model_distribution, possible_models
from .engine import conditional, parse_grid, sweep
from .logic import Language, LogicError, atoms_of, model_set, models_of, parse_formula
from .probability import UNDEFINED, MuSpec, Undefined, format_decimal, format_exact, parse_mu

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_DIFF = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_dataset(path: str) -> Dataset:
    with open(path, encoding="utf-8") as fh:
        return ingest(fh)


def _language(args) -> Language:
    """Language of the dataset, else ``--atoms``, else atoms in formula order."""
    if getattr(args, "dataset", None):
        return args._ds.lang
    if getattr(args, "atoms", None):
        return Language(tuple(a.strip() for a in args.atoms.split(",") if a.strip()))
    names: list[str] = []
    for text in [getattr(args, "alpha", None), *(args.premise or [])]:
        if text:
            for name in atoms_of(parse_formula(text)):
                if name not in names:
                    names.append(name)
    return Language(tuple(names))


def _formulas(args, lang):
    alpha = parse_formula(args.alpha, lang) if getattr(args, "alpha", None) else None
    delta = [parse_formula(t, lang) for t in (args.premise or [])]
    return alpha, delta


def _value_fields(p, digits):
    return {
        "value": format_exact(p),
        "decimal": format_decimal(p, digits),
        "defined": not isinstance(p, Undefined),
    }


def _verify(alpha, delta, ds, dist, mu: MuSpec, value):
    """Recompute through the oracle; returns (agree, oracle_value) or None when too large."""
    try:
        if mu.kind == "limit":
            ref = oracle.limit_via_mps(alpha, delta, dist)
        else:
            x = Fraction(1) if mu.kind == "one" else mu.value
            ref = oracle.joint_conditional(alpha, delta, ds, x)
    except consequence.SubsetCapExceeded:
        return None
    same = (ref is UNDEFINED and value is UNDEFINED) or (
        not isinstance(ref, Undefined) and not isinstance(value, Undefined) and ref == value
    )
    return same, ref


def cmd_ingest(args) -> int:
    ds = args._ds
    dist = model_distribution(ds)
    counts = ds.counts
    rows = [
        {"model": f"m{i + 1}", "index": i, "count": counts.get(i, 0), "p": format_exact(dist[i])}
        for i in range(ds.lang.n_models)
    ]
    if args.output == "json":
        print(json.dumps({"atoms": list(ds.lang.atoms), "K": ds.K, "models": rows}, indent=2))
    elif args.output == "csv":
        print("model,count,p")
        for r in rows:
            print(f"{r['model']},{r['count']},{r['p']}")
    else:
        print(f"atoms: {', '.join(ds.lang.atoms)}")
        print(f"K = {ds.K}")
        for r in rows:
            print(f"{r['model']}: K_n = {r['count']}, p = {r['p']}")
    return EXIT_OK


def cmd_query(args) -> int:
    ds = args._ds
    lang = ds.lang
    dist = model_distribution(ds)
    alpha, delta = _formulas(args, lang)
    mu = parse_mu(args.mu)
    value = conditional(alpha, delta, dist, mu)
    check = _verify(alpha, delta, ds, dist, mu, value) if args.verify else None
    fields = _value_fields(value, args.digits)
    if args.output == "json":
        payload = {"alpha": str(alpha), "delta": [str(b) for b in delta], "mu": str(mu), **fields}
        if args.verify:
            payload["verify"] = (
                None if check is None else {"agree": check[0], "oracle": format_exact(check[1])}
            )
        print(json.dumps(payload, indent=2))
    elif args.output == "csv":
        head = ["alpha", "delta", "mu", "value", "decimal"]
        row = [str(alpha), "; ".join(str(b) for b in delta), str(mu), fields["value"], fields["decimal"]]
        if args.verify:
            head.append("verified")
            row.append("skipped" if check is None else str(check[0]).lower())
        print(",".join(head))
        print(",".join(f'"{c}"' if "," in c else c for c in row))
    else:
        if isinstance(value, Undefined):
            print("UNDEFINED")
        else:
            print(f"{fields['value']} ({fields['decimal']})")
        if args.verify:
            if check is None:
                print("verify: skipped (instance too large for the oracle)")
            else:
                status = "agree" if check[0] else "DISAGREE"
                print(f"verify: {status} (oracle {format_exact(check[1])})")
    return EXIT_OK


def cmd_entail(args) -> int:
    relation = args.relation
    if relation in ("empirical", "mps") and not args.dataset:
        raise UsageError(f"--relation {relation} needs a dataset (-d)")
    lang = _language(args)
    alpha, delta = _formulas(args, lang)
    dist = model_distribution(args._ds) if args.dataset else None
    lines: list[str] = []
    if relation == "classical":
        holds = consequence.classical_entails(delta, alpha, lang)
        delta_models = model_set(delta, lang)
        if holds:
            lines.append(f"models of premises: {delta_models}")
        else:
            lines.append(f"counter-models: {delta_models - models_of(alpha, lang)}")
    elif relation == "empirical":
        holds = consequence.empirical_entails(delta, alpha, dist)
        possible = possible_models(dist, model_set(delta, lang))
        if holds:
            lines.append(f"possible models of premises: {possible}")
        else:
            lines.append(f"possible counter-models: {possible - models_of(alpha, lang)}")
    else:
        kind = relation
        family = consequence.mcs(delta, lang) if kind == "mcs" else consequence.mps(delta, dist)
        holds = consequence.para_entails(delta, alpha, kind, lang=lang, dist=dist)
        lines.append(f"{kind.upper()}: {family}")
        for s in consequence.failing_subsets(delta, alpha, kind, lang=lang, dist=dist):
            lines.append("fails: {" + ", ".join(str(f) for f in s) + "}")
    if args.output == "json":
        print(json.dumps({"relation": relation, "holds": holds, "detail": lines}, indent=2))
    else:
        print("YES" if holds else "NO")
        for line in lines:
            print(line)
    return EXIT_OK


def cmd_family(args) -> int:
    kind = args.command
    if kind == "mps" and not args.dataset:
        raise UsageError("mps needs a dataset (-d)")
    lang = _language(args)
    _, delta = _formulas(args, lang)
    if kind == "mcs":
        family = consequence.mcs(delta, lang)
        models = consequence.mcs_models(delta, lang)
    else:
        dist = model_distribution(args._ds)
        family = consequence.mps(delta, dist)
        models = consequence.mps_models(delta, dist)
    if args.output == "json":
        print(json.dumps({
            "kind": kind,
            "cardinality": family.cardinality,
            "members": [[str(f) for f in s] for s in family],
            "models": models.labels(),
        }, indent=2))
    else:
        print(f"{kind.upper()} (cardinality {family.cardinality}): {family}")
        print(f"models: {models}")
    return EXIT_OK


def cmd_regime(args) -> int:
    lang = args._ds.lang
    _, delta = _formulas(args, lang)
    report = consequence.classify_regime(delta, model_distribution(args._ds))
    if args.output == "json":
        print(json.dumps({"regime": report.regime, **report.flags()}, indent=2))
    else:
        print(f"regime: {report.regime}")
        for name, flag in report.flags().items():
            print(f"{name}: {'yes' if flag else 'no'}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    lang = args._ds.lang
    alpha, delta = _formulas(args, lang)
    points = sweep(alpha, delta, model_distribution(args._ds), parse_grid(args.grid))
    sys.stdout.write(reproduce.sweep_csv(points, args.digits, exact=args.exact))
    return EXIT_OK


def cmd_reproduce(args) -> int:
    targets = reproduce.TARGETS if args.target == "all" else (args.target,)
    failed = False
    for target in targets:
        rendered = reproduce.render(target)
        if args.out:
            out = Path(args.out)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"{target}.txt").write_text(rendered, encoding="utf-8")
        mismatch = reproduce.diff(target, rendered)
        if args.show or mismatch:
            sys.stdout.write(rendered)
        if mismatch:
            failed = True
            print(f"{target}: MISMATCH", file=sys.stderr)
            for line in mismatch:
                print(line, file=sys.stderr)
        else:
            print(f"{target}: ok")
    return EXIT_DIFF if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="genlogic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, dataset_required=False, alpha=False, alpha_required=False, premises=True):
        p.add_argument("-d", "--dataset", required=dataset_required, help="CSV dataset")
        if alpha:
            p.add_argument("-a", "--alpha", required=alpha_required, help="query formula")
        if premises:
            p.add_argument("-p", "--premise", action="append", default=[],
                           help="premise formula (repeatable)")
        p.add_argument("--output", choices=("text", "json", "csv"), default="text")
        p.add_argument("--digits", type=int, default=6, help="decimal places for display")

    p = sub.add_parser("ingest", help="summarise a dataset and its model distribution")
    p.add_argument("dataset_path", metavar="DATASET")
    p.add_argument("--output", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("query", help="p(alpha | premises)")
    common(p, dataset_required=True, alpha=True, alpha_required=True)
    p.add_argument("--mu", default="1", help="1, limit, or a rational/decimal in [0,1]")
    p.add_argument("--verify", action="store_true", help="cross-check with the oracle")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("entail", help="check a consequence relation")
    common(p, alpha=True, alpha_required=True)
    p.add_argument("-r", "--relation", choices=("classical", "empirical", "mcs", "mps"),
                   default="classical")
    p.add_argument("--atoms", help="comma-separated atoms when no dataset is given")
    p.set_defaults(func=cmd_entail)

    for name in ("mcs", "mps"):
        p = sub.add_parser(name, help=f"cardinality-maximal {'consistent' if name == 'mcs' else 'possible'} subsets")
        common(p)
        p.add_argument("--atoms", help="comma-separated atoms when no dataset is given")
        p.set_defaults(func=cmd_family)

    p = sub.add_parser("regime", help="which grounding assumptions hold")
    common(p, dataset_required=True)
    p.set_defaults(func=cmd_regime)

    p = sub.add_parser("sweep", help="CSV of p(alpha | premises) over a mu grid")
    common(p, dataset_required=True, alpha=True, alpha_required=True)
    p.add_argument("--grid", default="0:1:0.01", help="start:stop:step, inclusive")
    p.add_argument("--exact", action="store_true", help="print fractions instead of decimals")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("reproduce", help="regenerate and diff the bundled artifacts")
    p.add_argument("target", choices=(*reproduce.TARGETS, "all"))
    p.add_argument("--out", help="also write rendered artifacts here")
    p.add_argument("--show", action="store_true", help="print rendered artifacts")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    path = getattr(args, "dataset", None) or getattr(args, "dataset_path", None)
    try:
        args._ds = _read_dataset(path) if path else None
    except OSError as exc:
        print(f"genlogic: cannot read {path}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    except (DatasetError, LogicError) as exc:
        print(f"genlogic: {path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (LogicError, DatasetError, UsageError, ValueError) as exc:
        print(f"genlogic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"genlogic: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
