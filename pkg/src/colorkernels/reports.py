"""Explorer output writing: delimited report, figures, counterexample files."""

from __future__ import annotations

from pathlib import Path

from .digraph import parse_digraph
from .generators import ExploreReport


def write_explore_outputs(report: ExploreReport, outdir: Path) -> str:
    """Write the line-oriented report, a summary figure, and one serialized
    instance plus rendered figure per counterexample; returns the report text.

    Counterexample lines carry the path of the serialized instance file.
    """
    from .figures import render_digraph, render_explore_summary

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths: dict[int, Path] = {}
    for seed, text in report.counterexamples:
        inst = outdir / f"counterexample_{seed}.dg"
        inst.write_text(text, encoding="utf-8")
        render_digraph(
            parse_digraph(text), inst.with_suffix(".png"),
            title=f"{report.name} counterexample, seed {seed}",
        )
        paths[seed] = inst

    lines = []
    for line in report.lines:
        seed = int(line.split("\t", 1)[0])
        if seed in paths:
            line = f"{line}\t{paths[seed]}"
        lines.append(line)
    header = (
        f"# explorer {report.name}: {report.tested} tested, "
        f"{report.filtered_out} filtered out, {len(report.counterexamples)} counterexamples"
    )
    text = "\n".join([header] + lines) + "\n"
    (outdir / "report.txt").write_text(text, encoding="utf-8")
    render_explore_summary(report, outdir / "summary.png")
    return text
