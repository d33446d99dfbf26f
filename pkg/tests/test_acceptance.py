"""Acceptance gate: the ten desk-scale reproduction criteria.

Each test records one PASS/FAIL line (printed in the terminal summary) and
asserts the criterion at its stated tolerance.  Criterion 7 additionally
collects the walk-versus-simple-path divergences of the properly-colored
construction into a report instead of failing on them.
"""

import itertools
import random
import time

import pytest

from colorkernels import (
    ColoredDigraph,
    acyclic_rainbow_kernel,
    check_all_cycles_rainbow,
    check_all_triangles_rainbow,
    check_lemma1_instance,
    check_theorem2_hypothesis,
    induced_subdigraph,
    is_strongly_connected,
    kernel_of,
    pc_closure_layers,
    pcp_kernel_tournament,
    rainbow_kernel,
    rainbow_kernel_tournament,
    rainbow_reachable,
    rainbow_reachable_bruteforce,
    random_acyclic_digraph,
    random_digraph,
    random_tournament,
    random_tstar_shaped,
    t5_star,
    t_star,
    validate_rainbow_kernel,
    validate_tournament,
)
from colorkernels.kernels import ClosureDigraph
from colorkernels.reachability import pc_reachable_bruteforce, pc_walk_table_bruteforce
from colorkernels.reductions import (
    Hypergraph3,
    build_dh,
    enumerate_hypergraphs,
    verify_chain,
)

RESULTS = []


def _record(number, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    RESULTS.append(line)
    assert ok, line


def test_criterion_1_t5_star_has_no_rainbow_kernel():
    start = time.perf_counter()
    cert = rainbow_kernel(t5_star().underlying)
    elapsed = time.perf_counter() - start
    _record(
        1,
        "t5_star has no rainbow kernel",
        cert is None and elapsed < 1.0,
        f"{elapsed:.3f}s",
    )


def test_criterion_2_t_star_family():
    start = time.perf_counter()
    bad = []
    for n in range(3, 9):
        t = t_star(n)
        if rainbow_kernel_tournament(t) is not None:
            bad.append((n, "kernel"))
        d = t.underlying
        for k in range(3, n + 1):
            for subset in itertools.combinations(range(n), k):
                sub, _ = induced_subdigraph(d, subset)
                if is_strongly_connected(sub) and sub.m != k - 2:
                    bad.append((n, subset, sub.m))
    elapsed = time.perf_counter() - start
    _record(
        2,
        "t_star(3..8): no rainbow kernel, strong k-subtournaments carry k-2 colors",
        not bad and elapsed < 10.0,
        f"{elapsed:.1f}s, violations={bad[:3]}",
    )


def test_criterion_3_theorem2_property_suite():
    start = time.perf_counter()
    passed_filter = 0
    violations = 0
    for seed in range(1000):
        n = 3 + seed % 6  # 3..8
        m = 1 + seed % 5
        t = random_tournament(n, min(m, n * (n - 1) // 2), seed)
        if not check_theorem2_hypothesis(t).satisfied:
            continue
        passed_filter += 1
        if rainbow_kernel_tournament(t) is None:
            violations += 1
    elapsed = time.perf_counter() - start
    _record(
        3,
        "Theorem 2 property suite (1000 tournaments, n <= 8)",
        violations == 0 and elapsed < 60.0 and passed_filter > 0,
        f"{passed_filter} passed filter, {violations} violations, {elapsed:.1f}s",
    )


def _head_colored_tournament(n, seed):
    """Random orientation with c(u->v) = v: the three arcs of any directed
    triangle end in three different vertices, so every triangle is rainbow."""
    rng = random.Random(seed)
    arcs = []
    for u, v in itertools.combinations(range(n), 2):
        tail, head = (u, v) if rng.random() < 0.5 else (v, u)
        arcs.append((tail, head, head))
    used = sorted({c for _, _, c in arcs})
    cmap = {c: i for i, c in enumerate(used)}
    return validate_tournament(
        ColoredDigraph(n, tuple((t, h, cmap[c]) for t, h, c in arcs))
    )


def test_criterion_4_corollary2_property_suite():
    collected = 0
    violations = 0
    seed = 0
    while collected < 500 and seed < 40000:
        if seed % 2 == 0:
            # Full size range via the always-passing head coloring.
            t = _head_colored_tournament(3 + (seed // 2) % 6, seed)  # n in 3..8
        else:
            # Small sizes with free random colorings, filtered by the checker.
            n = 3 + seed % 3  # 3..5
            arcs = n * (n - 1) // 2
            t = random_tournament(n, arcs, seed)
        seed += 1
        if check_all_triangles_rainbow(t) is not None:
            continue
        collected += 1
        if rainbow_kernel_tournament(t) is None:
            violations += 1
    _record(
        4,
        "Corollary 2 property suite (500 all-triangles-rainbow tournaments)",
        collected == 500 and violations == 0,
        f"{collected} collected, {violations} violations",
    )


def test_criterion_5_lemma1_property_suite():
    collected = 0
    failures = 0
    seed = 0
    while collected < 500 and seed < 20000:
        t_size = 2 + seed % 5  # t in 2..6
        arcs = (t_size + 1) * t_size // 2
        m = max(2, arcs - seed % 3)
        t = random_tstar_shaped(t_size, m, seed)
        seed += 1
        report = check_theorem2_hypothesis(t, require_back_arc=(t.n - 1, 0))
        if not report.satisfied:
            continue
        collected += 1
        found = check_lemma1_instance(t)
        if found is None:
            failures += 1
        else:
            i, witness = found
            assert witness.start == i and witness.end == i - 1
            witness.validate(t.underlying, tag="rainbow")
    _record(
        5,
        "Lemma 1 property suite (500 T*-shaped instances, t <= 6)",
        collected == 500 and failures == 0,
        f"{collected} collected, {failures} without a backward path",
    )


def test_criterion_6_reduction_chain():
    start = time.perf_counter()
    exhaustive = 0
    for h in enumerate_hypergraphs(2, 3):
        verify_chain(h)  # raises on any mismatch
        r = build_dh(h)
        n, m = h.n_groups, h.n_edges
        assert r.digraph.n == 2 * n * m + n + 1
        assert len(r.digraph.arcs) == 3 * n * m
        exhaustive += 1
    rng = random.Random(20260826)
    for _ in range(200):
        n = rng.randint(1, 2)
        universe = list(itertools.combinations(range(1, 3 * n + 1), 3))
        m = rng.randint(1, min(3, len(universe)))
        h = Hypergraph3(n, tuple(frozenset(e) for e in rng.sample(universe, m)))
        verify_chain(h)
        r = build_dh(h)
        assert r.digraph.n == 2 * n * m + n + 1
        assert len(r.digraph.arcs) == 3 * n * m
    elapsed = time.perf_counter() - start
    _record(
        6,
        "reduction chain three-way agreement (exhaustive n<=2,m<=3 + 200 random)",
        exhaustive == 1351,
        f"{exhaustive} exhaustive instances, {elapsed:.1f}s",
    )


def test_criterion_7_oracle_equivalence():
    rainbow_mismatches = 0
    for seed in range(500):
        n = 3 + seed % 5  # 3..7
        d = random_digraph(n, 1 + seed % 4, seed)
        for u, v in itertools.permutations(range(d.n), 2):
            fast = rainbow_reachable(d, u, v)
            slow = rainbow_reachable_bruteforce(d, u, v)
            if (fast is None) != (slow is None):
                rainbow_mismatches += 1

    walk_mismatches = 0
    pair_divergences = []
    kernel_divergences = []
    for seed in range(200):
        t = random_tournament(6, 3, seed)
        rel = pc_closure_layers(t)
        if rel.layer_pairs(rel.last_layer) != pc_walk_table_bruteforce(
            t.underlying, t.n - 1
        ):
            walk_mismatches += 1
        simple = {
            (u, v)
            for u, v in itertools.permutations(range(t.n), 2)
            if pc_reachable_bruteforce(t.underlying, u, v) is not None
        }
        walk = {
            (u, v)
            for u, v in itertools.permutations(range(t.n), 2)
            if rel.vertex_relation()[u, v]
        }
        for pair in walk ^ simple:
            pair_divergences.append((seed, pair, pair in walk))
        simple_kernel = next(
            (
                v
                for v in range(t.n)
                if all((u, v) in simple for u in range(t.n) if u != v)
            ),
            None,
        )
        layered_kernel = pcp_kernel_tournament(t)
        if simple_kernel != layered_kernel:
            kernel_divergences.append((seed, simple_kernel, layered_kernel))
    kernel_existence = [
        d for d in kernel_divergences if (d[1] is None) != (d[2] is None)
    ]

    # Divergences between walks and simple paths are a documented finding,
    # not a failure; only walk=True/simple=False is a sound direction though.
    unsound = [d for d in pair_divergences if not d[2]]
    _record(
        7,
        "oracle equivalence (rainbow exact; PC layered = walk oracle; "
        "walk-vs-path divergences reported)",
        rainbow_mismatches == 0 and walk_mismatches == 0 and not unsound,
        f"pc walk-vs-simple-path divergences: {len(pair_divergences)} pairs "
        f"(all walk-only), {len(kernel_existence)} kernel existence / "
        f"{len(kernel_divergences)} kernel vertex-choice",
    )


def test_criterion_8_acyclic_sink_peeling():
    failures = 0
    for seed in range(500):
        n = 3 + seed % 8  # 3..10
        d = random_acyclic_digraph(n, 1 + seed % 4, seed)
        try:
            cert = acyclic_rainbow_kernel(d)
            validate_rainbow_kernel(d, cert)
        except Exception:
            failures += 1
    _record(
        8,
        "Observation 1 sink-peeling re-validates on 500 acyclic digraphs",
        failures == 0,
        f"{failures} failures",
    )


def test_criterion_9_monochromatic_equivalence():
    disagreements = 0
    for seed in range(300):
        n = 3 + seed % 5  # 3..7
        d = random_digraph(n, 2, seed)
        plain = ClosureDigraph(d.n, tuple((t, h) for t, h, _ in d.arcs))
        mono = ColoredDigraph(d.n, tuple((t, h, 0) for t, h, _ in d.arcs))
        if (kernel_of(plain) is None) != (rainbow_kernel(mono) is None):
            disagreements += 1
    _record(
        9,
        "monochromatic equivalence on 300 digraphs",
        disagreements == 0,
        f"{disagreements} disagreements",
    )


def test_criterion_10_pc_closure_performance():
    def best_time(n):
        t = random_tournament(n, 5, 3)
        return min(
            _timed(lambda: pc_closure_layers(t)) for _ in range(3)
        )

    def _timed(fn):
        start = time.perf_counter()
        fn()
        return time.perf_counter() - start

    t40 = best_time(40)
    t80 = best_time(80)
    ratio = t80 / t40
    _record(
        10,
        "pc_closure_layers performance (n=40 under 5s; doubling n costs <= ~10x)",
        t40 < 5.0 and ratio <= 10.0,
        f"n=40: {t40:.3f}s, n=80: {t80:.3f}s, ratio {ratio:.1f}x",
    )
