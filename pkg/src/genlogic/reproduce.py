"""Regenerate the worked tables, curve and examples from bundled fixtures."""

from __future__ import annotations

import csv
import difflib
import io
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .consequence import classical_entails, classify_regime, mcs, mcs_models, mps, mps_models
from .dataset import Dataset, ingest, model_distribution
from .engine import conditional, marginal, marginal_polynomial, sweep
from .logic import Language, enumerate_models, parse_formula
from .probability import LIMIT, ONE, format_decimal, format_exact

TARGETS = ("table1", "table2", "fig3", "examples")

FIG3_GRID = [Fraction(i, 20) for i in range(21)]


def load_fixture(name: str) -> Dataset:
    with resources.files("genlogic.data").joinpath(name).open(encoding="utf-8") as fh:
        return ingest(fh)


def expected_text(target: str) -> str:
    path = resources.files("genlogic.data").joinpath("expected", f"{target}.txt")
    return path.read_text(encoding="utf-8")


def render_table1() -> str:
    ds = load_fixture("table1.csv")
    dist = model_distribution(ds)
    lang = ds.lang
    alpha = parse_formula("rain -> wet", lang)
    counts = ds.counts
    lines = ["model,rain,wet,K_n,p(m)"]
    for m in enumerate_models(lang):
        bits = ",".join(str(int(b)) for b in m.assignment)
        lines.append(f"{m.label},{bits},{counts.get(m.index, 0)},{format_exact(dist[m.index])}")
    lines.append(f"K = {ds.K}")
    lines.append(f"p({alpha}) = {marginal_polynomial(alpha, dist)}")
    lines.append(f"p({alpha}) at mu=1: {format_exact(marginal(alpha, dist, ONE))}")
    lines.append(f"p({alpha}) at mu->1: {format_exact(marginal(alpha, dist, LIMIT))}")
    return "\n".join(lines) + "\n"


def render_table2() -> str:
    dist = model_distribution(load_fixture("table2.csv"))
    lang = dist.lang
    rows = [
        ("wet", ["rain", "!rain"]),
        ("wet", ["rain"]),
        ("!rain | wet", []),
    ]
    lines = ["alpha,delta,p(alpha|delta) at mu=1,classical,regime"]
    for a_text, d_texts in rows:
        alpha = parse_formula(a_text, lang)
        delta = [parse_formula(t, lang) for t in d_texts]
        value = conditional(alpha, delta, dist, ONE)
        verdict = "YES" if classical_entails(delta, alpha, lang) else "NO"
        regime = classify_regime(delta, dist).regime
        lines.append(f"{a_text},{{{'; '.join(d_texts)}}},{format_exact(value)},{verdict},{regime}")
    return "\n".join(lines) + "\n"


def render_fig3() -> str:
    dist = model_distribution(load_fixture("fig3.csv"))
    lang = dist.lang
    alpha = parse_formula("rain", lang)
    delta = [parse_formula(t, lang) for t in ("rain", "wet", "!wet")]
    return sweep_csv(sweep(alpha, delta, dist, FIG3_GRID))


def sweep_csv(points, digits: int = 6, exact: bool = False) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["mu", "value", "limit"])
    render = format_exact if exact else (lambda p: format_decimal(p, digits))
    for pt in points:
        value = "UNDEF" if not isinstance(pt.value, Fraction) else render(pt.value)
        limit = "" if pt.limit is None else render(pt.limit)
        writer.writerow([render(pt.mu), value, limit])
    return out.getvalue()


def render_examples() -> str:
    lines = []
    fig3 = model_distribution(load_fixture("fig3.csv"))
    lang = fig3.lang
    delta = [parse_formula(t, lang) for t in ("rain", "wet", "rain -> wet", "!wet")]
    lines.append(f"example3 MCS = {mcs(delta, lang)}")
    lines.append(f"example3 MCS models = {mcs_models(delta, lang)}")

    ex4 = model_distribution(load_fixture("example4.csv"))
    lines.append(f"example4 MPS = {mps(delta, ex4)}")
    lines.append(f"example4 MPS possible models = {mps_models(delta, ex4)}")
    lines.append(f"example4 regime = {classify_regime(delta, ex4).regime}")

    small = Language(("a",))
    for text in (["a", "!a"], ["a & !a"]):
        d = [parse_formula(t, small) for t in text]
        lines.append(f"contradiction MCS of {{{'; '.join(text)}}} = {mcs(d, small)}, models = {mcs_models(d, small)}")

    t2 = model_distribution(load_fixture("table2.csv"))
    for text in (["rain", "!rain"], ["rain & !rain"]):
        d = [parse_formula(t, lang) for t in text]
        lines.append(
            f"example5 MPS of {{{'; '.join(text)}}} = {mps(d, t2)}, possible models = {mps_models(d, t2)}"
        )
    d = [parse_formula(t, lang) for t in ("rain", "wet", "!wet")]
    lines.append(
        f"fig3 p(rain | rain, wet, !wet) at mu->1 = {format_exact(conditional(parse_formula('rain', lang), d, fig3, LIMIT))}"
    )
    return "\n".join(lines) + "\n"


RENDERERS = {
    "table1": render_table1,
    "table2": render_table2,
    "fig3": render_fig3,
    "examples": render_examples,
}


def render(target: str) -> str:
    return RENDERERS[target]()


def diff(target: str, rendered: str | None = None) -> list[str]:
    """Unified diff between the regenerated artifact and the committed one."""
    rendered = render(target) if rendered is None else rendered
    expected = expected_text(target)
    return list(
        difflib.unified_diff(
            expected.splitlines(), rendered.splitlines(),
            fromfile=f"expected/{target}.txt", tofile=f"rendered/{target}", lineterm="",
        )
    )


def write_all(out_dir: Path, targets=TARGETS) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    for t in targets:
        (out_dir / f"{t}.txt").write_text(render(t), encoding="utf-8")
