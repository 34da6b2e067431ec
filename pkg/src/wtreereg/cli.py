"""Command line interface.

Exit codes: 0 success, 1 mismatch or domain error, 2 usage error (click),
3 I/O error (unreadable or malformed input, unwritable output).
"""

from __future__ import annotations

import json
import sys
from collections import Counter

import click

from .betti import regularity
from .errors import WtreeregError
from .formulas import power_reg_result, reg_closed_form
from .harness import SuiteConfig, run_suite
from .monomial import edge_ideal
from .wgraph import WeightedGraph, is_integrally_closed


def _load_graph(path: str) -> WeightedGraph:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        click.echo(f"error: cannot read {path}: {exc}", err=True)
        sys.exit(3)
    except json.JSONDecodeError as exc:
        click.echo(f"error: {path} is not valid JSON: {exc}", err=True)
        sys.exit(3)
    try:
        return WeightedGraph.from_json(data)
    except (WtreeregError, KeyError, TypeError, ValueError) as exc:
        click.echo(f"error: {path} is not a valid graph: {exc}", err=True)
        sys.exit(3)


def _fail(exc: Exception):
    click.echo(f"error: {exc}", err=True)
    sys.exit(1)


@click.group()
def main():
    """Regularity of edge ideals of edge-weighted trees: closed forms
    checked against a Betti-number oracle."""


@main.command()
@click.argument("graph", type=click.Path())
def check(graph):
    """Structural facts: tree-ness, weights, integral closure."""
    G = _load_graph(graph)
    info = {
        "vertices": len(G.vertices),
        "edges": len(G.edges),
        "tree": G.is_tree(),
        "trivially_weighted": G.is_trivially_weighted(),
        "non_trivial_edges": len(G.non_trivial_edges),
        "integrally_closed": is_integrally_closed(G),
    }
    click.echo(json.dumps(info, sort_keys=True))


@main.command()
@click.argument("graph", type=click.Path())
@click.option("--oracle", is_flag=True, help="also run the Betti oracle and compare")
def reg(graph, oracle):
    """Closed-form regularity of the edge ideal."""
    G = _load_graph(graph)
    try:
        res = reg_closed_form(G)
    except WtreeregError as exc:
        _fail(exc)
    out = res.to_json()
    code = 0
    if oracle:
        try:
            o = regularity(edge_ideal(G)).reg
        except WtreeregError as exc:
            _fail(exc)
        out["oracle"] = o
        out["agree"] = o == res.value
        if not out["agree"]:
            code = 1
    click.echo(json.dumps(out, sort_keys=True))
    sys.exit(code)


@main.command()
@click.argument("graph", type=click.Path())
@click.option("--t", "t", type=click.IntRange(min=1), default=2, show_default=True)
def power(graph, t):
    """Exact value (when a proven case applies) and upper bound for reg(I^t)."""
    G = _load_graph(graph)
    try:
        pr = power_reg_result(G, t)
    except WtreeregError as exc:
        _fail(exc)
    click.echo(json.dumps(pr.to_json(), sort_keys=True))


@main.command()
@click.option("--golden", "mode", flag_value="golden", help="the two recorded reference trees")
@click.option("--enumerate", "mode", flag_value="enumerate", help="all small integrally closed weighted trees")
@click.option("--random", "count", type=click.IntRange(min=1), default=None, metavar="N", help="N seeded random instances")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--max-vertices", type=click.IntRange(min=2), default=7, show_default=True)
@click.option("--max-weight", type=click.IntRange(min=1), default=3, show_default=True)
@click.option("--t-max", type=click.IntRange(min=1), default=2, show_default=True)
@click.option("--out", type=click.Path(), default=None, help="write JSON Lines here instead of stdout")
@click.option("--figures/--no-figures", default=True, show_default=True, help="render summary PNGs next to --out")
def verify(mode, count, seed, max_vertices, max_weight, t_max, out, figures):
    """Run a verification suite; exit 0 iff no instance is a MISMATCH."""
    if count is not None:
        if mode is not None:
            raise click.UsageError("choose exactly one of --golden, --enumerate, --random N")
        mode = "random"
    if mode is None:
        raise click.UsageError("choose one of --golden, --enumerate, --random N")
    cfg = SuiteConfig(
        mode=mode,
        seed=seed,
        count=count if count is not None else 100,
        max_vertices=max_vertices,
        max_weight=max_weight,
        t_max=t_max,
    )
    try:
        code, reports = run_suite(cfg, out=out)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)
    if out is None:
        for r in reports:
            click.echo(json.dumps(r.to_json(), sort_keys=True))
    counts = Counter(r.verdict for r in reports)
    click.echo(
        f"{len(reports)} instances: "
        + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())),
        err=True,
    )
    if out is not None and figures:
        from .figures import render_report_figures

        try:
            for p in render_report_figures(reports, out):
                click.echo(f"figure: {p}", err=True)
        except OSError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)
    sys.exit(code)


if __name__ == "__main__":
    main()
