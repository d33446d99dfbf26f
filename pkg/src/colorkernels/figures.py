"""Matplotlib rendering of colored digraphs and explorer summaries to files."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .digraph import ColoredDigraph
from .generators import ExploreReport

_CMAP = plt.get_cmap("tab10")


def render_digraph(d: ColoredDigraph, path: str | Path, title: str | None = None) -> Path:
    """Draw the digraph on a circular layout, one arrow color per arc color,
    and save it to path (format from the suffix)."""
    path = Path(path)
    n = max(d.n, 1)
    pos = [
        (math.cos(2 * math.pi * i / n - math.pi / 2), math.sin(2 * math.pi * i / n - math.pi / 2))
        for i in range(n)
    ]
    fig, ax = plt.subplots(figsize=(5, 5))
    for t, h, c in d.arcs:
        (x1, y1), (x2, y2) = pos[t], pos[h]
        ax.annotate(
            "",
            xy=(x2, y2),
            xytext=(x1, y1),
            arrowprops=dict(
                arrowstyle="-|>",
                color=_CMAP(c % 10),
                shrinkA=12,
                shrinkB=12,
                lw=1.4,
            ),
        )
    for v in range(d.n):
        x, y = pos[v]
        ax.plot([x], [y], "o", color="black", markersize=8, zorder=3)
        ax.annotate(str(v), (x * 1.14, y * 1.14), ha="center", va="center")
    if title:
        ax.set_title(title)
    ax.set_xlim(-1.3, 1.3)
    ax.set_ylim(-1.3, 1.3)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def render_explore_summary(report: ExploreReport, path: str | Path) -> Path:
    """Bar chart of explorer outcomes (filtered / passed / counterexamples)."""
    path = Path(path)
    passed = report.tested - len(report.counterexamples)
    labels = ["filtered out", "kernel found", "counterexamples"]
    counts = [report.filtered_out, passed, len(report.counterexamples)]
    fig, ax = plt.subplots(figsize=(5, 3.2))
    bars = ax.bar(labels, counts, color=["#999999", "#4878cf", "#d1495b"])
    ax.bar_label(bars)
    ax.set_ylabel("instances")
    ax.set_title(f"explorer {report.name}")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
