"""Command-line entry point.

Exit codes: 0 decided/constructed successfully, 1 decided negatively (e.g. no
kernel), 2 input error, 3 guard or size refusal.  All output is deterministic
for fixed inputs and seeds.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import generators, kernels, reductions
from .digraph import (
    GuardError,
    ParseError,
    PathWitness,
    ValidationError,
    parse_digraph,
    parse_tournament,
    serialize_digraph,
    serialize_dot,
    serialize_tournament,
)
from .reports import write_explore_outputs


@dataclass(frozen=True)
class CommandOutcome:
    exit_code: int
    report_text: str


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: D102 - argparse hook
        raise _UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _format_witness(w: PathWitness) -> str:
    verts = " -> ".join(str(v) for v in w.vertices)
    if w.colors is None:
        return verts
    return f"{verts}  [colors {' '.join(str(c) for c in w.colors)}]"


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}")


def _emit(text: str, out: str | None) -> str:
    if out is None:
        return text
    Path(out).write_text(text, encoding="utf-8")
    return f"wrote {out}\n"


def _build_parser() -> _Parser:
    p = _Parser(prog="colorkernels")
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate instances")
    gsub = gen.add_subparsers(dest="what", required=True)
    g1 = gsub.add_parser("t5star")
    g1.add_argument("-o", "--output")
    g2 = gsub.add_parser("tstar")
    g2.add_argument("n", type=int)
    g2.add_argument("-o", "--output")
    g3 = gsub.add_parser("random")
    g3.add_argument("n", type=int)
    g3.add_argument("m", type=int)
    g3.add_argument("--seed", type=int, required=True)
    g3.add_argument("-o", "--output")

    ker = sub.add_parser("kernel", help="kernel computations")
    ker.add_argument("kind", choices=["rainbow", "pcp"])
    ker.add_argument("file")

    clo = sub.add_parser("closure", help="closure constructions")
    clo.add_argument("kind", choices=["rainbow", "pc"])
    clo.add_argument("file")

    chk = sub.add_parser("check", help="structural checkers")
    chk.add_argument("kind", choices=["thm2", "triangles", "cycles", "lemma1"])
    chk.add_argument("file")

    red = sub.add_parser("reduce", help="hardness reduction gadgets")
    red.add_argument("kind", choices=["3dpm-to-rpog", "rpog-to-rkt", "3dpm-to-rkt"])
    red.add_argument("file")
    red.add_argument("-o", "--output")

    sol = sub.add_parser("solve", help="brute-force solvers")
    sol.add_argument("kind", choices=["3dpm"])
    sol.add_argument("file")

    ver = sub.add_parser("verify", help="reduction chain verification")
    ver.add_argument("kind", choices=["chain"])
    ver.add_argument("file")

    exp = sub.add_parser("explore", help="open-question explorers")
    exp.add_argument("kind", choices=["problem1", "fk"])
    exp.add_argument("--n", type=int, required=True)
    exp.add_argument("--m", type=int, default=3)
    exp.add_argument("--seeds", type=int, required=True)
    exp.add_argument("--seed", type=int, required=True)
    exp.add_argument("-o", "--output", required=True, help="output directory")

    exo = sub.add_parser("export", help="exports")
    exo.add_argument("kind", choices=["dot", "figure"])
    exo.add_argument("file")
    exo.add_argument("-o", "--output")

    return p


def _cmd_gen(args) -> CommandOutcome:
    if args.what == "t5star":
        text = serialize_tournament(generators.t5_star())
    elif args.what == "tstar":
        text = serialize_tournament(generators.t_star(args.n))
    else:
        text = serialize_tournament(generators.random_tournament(args.n, args.m, args.seed))
    return CommandOutcome(0, _emit(text, args.output))


def _cmd_kernel(args) -> CommandOutcome:
    text = _read(args.file)
    if args.kind == "rainbow":
        cert = kernels.rainbow_kernel(parse_digraph(text))
        if cert is None:
            return CommandOutcome(1, "no rainbow kernel\n")
        lines = ["kernel: " + " ".join(str(v) for v in sorted(cert.kernel))]
        for v in sorted(cert.witnesses):
            lines.append(f"witness {v}: {_format_witness(cert.witnesses[v])}")
        return CommandOutcome(0, "\n".join(lines) + "\n")
    t = parse_tournament(text)
    vertex = kernels.pcp_kernel_tournament(t)
    if vertex is None:
        return CommandOutcome(1, "no pcp-kernel\n")
    return CommandOutcome(0, f"kernel: {vertex}\n")


def _cmd_closure(args) -> CommandOutcome:
    text = _read(args.file)
    if args.kind == "rainbow":
        closure = kernels.rainbow_closure(parse_digraph(text))
    else:
        closure = kernels.pc_closure(parse_tournament(text))
    lines = [f"closure {closure.n} {len(closure.arcs)}"]
    lines.extend(f"arc {t} {h}" for t, h in sorted(closure.arcs))
    return CommandOutcome(0, "\n".join(lines) + "\n")


def _cmd_check(args) -> CommandOutcome:
    text = _read(args.file)
    if args.kind == "thm2":
        report = generators.check_theorem2_hypothesis(parse_tournament(text))
        if report.satisfied:
            return CommandOutcome(0, "hypothesis satisfied\n")
        subset = " ".join(str(v) for v in report.violating_subset)
        return CommandOutcome(
            1, f"hypothesis violated: subset {subset} uses {report.colors_found} colors\n"
        )
    if args.kind == "triangles":
        triangle = generators.check_all_triangles_rainbow(parse_tournament(text))
        if triangle is None:
            return CommandOutcome(0, "all triangles rainbow\n")
        return CommandOutcome(1, "non-rainbow triangle: " + " ".join(map(str, triangle)) + "\n")
    if args.kind == "cycles":
        cycle = generators.check_all_cycles_rainbow(parse_digraph(text))
        if cycle is None:
            return CommandOutcome(0, "all cycles rainbow\n")
        return CommandOutcome(1, "non-rainbow cycle: " + " ".join(map(str, cycle)) + "\n")
    found = generators.check_lemma1_instance(parse_tournament(text))
    if found is None:
        return CommandOutcome(1, "no backward rainbow path found (unexpected)\n")
    i, witness = found
    return CommandOutcome(0, f"i={i}: {_format_witness(witness)}\n")


def _cmd_reduce(args) -> CommandOutcome:
    text = _read(args.file)
    if args.kind == "3dpm-to-rpog":
        r = reductions.build_dh(reductions.parse_hypergraph(text))
        return CommandOutcome(0, _emit(reductions.serialize_rpog(r), args.output))
    if args.kind == "rpog-to-rkt":
        t, labels = reductions.build_td(reductions.parse_rpog(text))
    else:
        r = reductions.build_dh(reductions.parse_hypergraph(text))
        t, labels = reductions.build_td(r)
    header = "".join(
        f"# {name} = {vid}\n" for name, vid in sorted(labels.items())
    )
    return CommandOutcome(0, _emit(header + serialize_tournament(t), args.output))


def _cmd_solve(args) -> CommandOutcome:
    h = reductions.parse_hypergraph(_read(args.file))
    matching = reductions.solve_3dpm_bruteforce(h)
    if matching is None:
        return CommandOutcome(1, "no perfect matching\n")
    return CommandOutcome(0, "matching: " + " ".join(map(str, matching)) + "\n")


def _cmd_verify(args) -> CommandOutcome:
    h = reductions.parse_hypergraph(_read(args.file))
    try:
        report = reductions.verify_chain(h)
    except ValidationError as exc:
        return CommandOutcome(1, f"verification failure: {exc}\n")
    return CommandOutcome(0, report.summary() + "\nchain agrees\n")


def _cmd_explore(args) -> CommandOutcome:
    seeds = range(args.seed, args.seed + args.seeds)
    if args.kind == "problem1":
        report = generators.explore_problem1(args.n, args.m, seeds)
    else:
        report = generators.explore_fk_conjecture(
            range(4, args.n + 1), seeds, n=args.n, m=args.m
        )
    text = write_explore_outputs(report, Path(args.output))
    return CommandOutcome(0, text)


def _cmd_export(args) -> CommandOutcome:
    d = parse_digraph(_read(args.file))
    if args.kind == "dot":
        return CommandOutcome(0, _emit(serialize_dot(d), args.output))
    from .figures import render_digraph

    out = args.output or (str(Path(args.file).with_suffix(".png")))
    render_digraph(d, out)
    return CommandOutcome(0, f"wrote {out}\n")


_HANDLERS = {
    "gen": _cmd_gen,
    "kernel": _cmd_kernel,
    "closure": _cmd_closure,
    "check": _cmd_check,
    "reduce": _cmd_reduce,
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "explore": _cmd_explore,
    "export": _cmd_export,
}


def run(argv: list[str]) -> CommandOutcome:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        return CommandOutcome(2, str(exc))
    try:
        return _HANDLERS[args.command](args)
    except GuardError as exc:
        return CommandOutcome(3, f"refused: {exc}\n")
    except (ParseError, ValidationError) as exc:
        return CommandOutcome(2, f"input error: {exc}\n")


def main() -> None:
    outcome = run(sys.argv[1:])
    stream = sys.stdout if outcome.exit_code in (0, 1) else sys.stderr
    stream.write(outcome.report_text)
    raise SystemExit(outcome.exit_code)


if __name__ == "__main__":
    main()
