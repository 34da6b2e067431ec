"""Matplotlib figures summarizing a verification run.

Rendered with the Agg backend so the CLI works headless; files land next
to the JSON Lines report.
"""

from __future__ import annotations

from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .harness import BOUND_ONLY, MISMATCH, PASS, SKIPPED, VerificationReport

VERDICT_ORDER = [PASS, BOUND_ONLY, MISMATCH, SKIPPED]
_COLORS = {
    PASS: "#2a9d59",
    BOUND_ONLY: "#4a7fb5",
    MISMATCH: "#c4453c",
    SKIPPED: "#999999",
}


def render_report_figures(reports: list[VerificationReport], out_path: str) -> list[str]:
    """Write a verdict bar chart and a formula-vs-oracle scatter next to
    the report file; returns the figure paths."""
    base = Path(out_path)
    stem = base.parent / base.stem
    written = []

    counts = Counter(r.verdict for r in reports)
    fig, ax = plt.subplots(figsize=(5.0, 3.2))
    vals = [counts.get(v, 0) for v in VERDICT_ORDER]
    bars = ax.bar(VERDICT_ORDER, vals, color=[_COLORS[v] for v in VERDICT_ORDER])
    ax.bar_label(bars)
    ax.set_ylabel("instances")
    ax.set_title(f"verdicts across {len(reports)} instances")
    fig.tight_layout()
    path = f"{stem}_verdicts.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)

    reg_pts: Counter = Counter()
    for r in reports:
        if r.oracle_reg is not None:
            reg_pts[(r.formula_reg["value"], r.oracle_reg)] += 1
    bound_pts: Counter = Counter()
    for r in reports:
        for p in r.powers:
            if p["oracle"] is not None:
                bound_pts[(p["upper_bound"], p["oracle"])] += 1

    fig, axes = plt.subplots(1, 2, figsize=(8.6, 3.6))
    panels = [
        (reg_pts, "closed-form reg", "oracle reg", "regularity, t=1"),
        (bound_pts, "upper bound", "oracle reg", "powers, t >= 2"),
    ]
    for ax, (data, xl, yl, title) in zip(axes, panels):
        if data:
            xs = [k[0] for k in data]
            ys = [k[1] for k in data]
            sizes = [20 + 12 * data[k] for k in data]
            lo = min(min(xs), min(ys)) - 1
            hi = max(max(xs), max(ys)) + 1
            ax.plot([lo, hi], [lo, hi], ls="--", lw=0.8, color="#888888", zorder=1)
            ax.scatter(xs, ys, s=sizes, alpha=0.7, zorder=2)
        else:
            ax.text(0.5, 0.5, "no data", ha="center", va="center", transform=ax.transAxes)
        ax.set_xlabel(xl)
        ax.set_ylabel(yl)
        ax.set_title(title)
    fig.tight_layout()
    path = f"{stem}_regularity.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)
    return written
