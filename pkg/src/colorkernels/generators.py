"""Counterexample tournaments, random instance generators, and empirical
checkers for the structural statements about rainbow kernels.

The explorers gather desk-scale evidence on open questions; they never assert
an outcome, they only tabulate and serialize anything unexpected.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .digraph import (
    ColoredDigraph,
    GuardError,
    PathWitness,
    Tournament,
    ValidationError,
    induced_subdigraph,
    is_acyclic,
    is_strongly_connected,
    serialize_digraph,
    serialize_tournament,
    validate_tournament,
)
from .kernels import rainbow_kernel_tournament, rainbow_kernel
from .reachability import rainbow_reachable

SUBSET_MAX_VERTICES = 14
CYCLE_MAX_VERTICES = 12


# ---------------------------------------------------------------------------
# Fixed counterexample tournaments
# ---------------------------------------------------------------------------

def t_star(n: int) -> Tournament:
    """The near-transitive counterexample tournament: higher index beats lower
    index, with the single exception v0 -> v2.

    Its only cycle is the triangle v0 -> v2 -> v1 -> v0, which is
    monochromatic in color 0; every remaining arc gets the color of its
    larger endpoint.  Any strongly connected k-vertex subtournament then
    carries exactly k-2 distinct colors, yet no vertex is rainbow-reachable
    from all others, so there is no rainbow kernel.

    (With the orientation transposed the structure has an absorbing sink and
    a trivial rainbow kernel; this orientation is the one with the claimed
    properties, verified exhaustively in the test suite.)
    """
    if n < 3:
        raise ValidationError(f"t_star needs n >= 3, got {n}")
    arcs = []
    for i, j in itertools.combinations(range(n), 2):
        tail, head = ((0, 2) if (i, j) == (0, 2) else (j, i))
        color = 0 if j <= 2 else j - 2
        arcs.append((tail, head, color))
    return validate_tournament(ColoredDigraph(n, tuple(arcs)))


def t5_star() -> Tournament:
    """The 2-colored 5-vertex tournament with no monochromatic triangle and no
    rainbow kernel: a Hamilton cycle in one color, the five chords in the
    other."""
    cycle = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    chords = [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]
    arcs = [(t, h, 0) for t, h in cycle] + [(t, h, 1) for t, h in chords]
    return validate_tournament(ColoredDigraph(5, tuple(arcs)))


# ---------------------------------------------------------------------------
# Random generators (deterministic in seed)
# ---------------------------------------------------------------------------

def _compact_colors(arcs: list[tuple[int, int, int]]) -> list[tuple[int, int, int]]:
    used = sorted({c for _, _, c in arcs})
    cmap = {c: i for i, c in enumerate(used)}
    return [(t, h, cmap[c]) for t, h, c in arcs]


def random_tournament(n: int, m: int, seed: int) -> Tournament:
    """Uniform orientation per pair and uniform color per arc from a palette
    of size m; colors are then compacted to stay dense."""
    if n < 2:
        raise ValidationError(f"random_tournament needs n >= 2, got {n}")
    if not (1 <= m <= n * (n - 1) // 2):
        raise ValidationError(f"palette size {m} outside 1..{n * (n - 1) // 2}")
    rng = random.Random(seed)
    arcs = []
    for u, v in itertools.combinations(range(n), 2):
        tail, head = (u, v) if rng.random() < 0.5 else (v, u)
        arcs.append((tail, head, rng.randrange(m)))
    return validate_tournament(ColoredDigraph(n, tuple(_compact_colors(arcs))))


def random_digraph(n: int, m: int, seed: int, arc_prob: float = 0.5) -> ColoredDigraph:
    """Random simple loopless digraph: each ordered pair gets an arc with the
    given probability unless the reverse was chosen, colors uniform then
    compacted."""
    rng = random.Random(seed)
    arcs = []
    taken = set()
    for u, v in itertools.permutations(range(n), 2):
        if (v, u) in taken:
            continue
        if rng.random() < arc_prob:
            taken.add((u, v))
            arcs.append((u, v, rng.randrange(m)))
    if not arcs:
        return ColoredDigraph(n, ())
    return ColoredDigraph(n, tuple(_compact_colors(arcs)))


def random_acyclic_digraph(n: int, m: int, seed: int, arc_prob: float = 0.5) -> ColoredDigraph:
    """Random acyclic colored digraph: arcs only from lower to higher vertex
    under a random hidden ordering."""
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    arcs = []
    for i, j in itertools.combinations(range(n), 2):
        if rng.random() < arc_prob:
            arcs.append((order[i], order[j], rng.randrange(m)))
    if not arcs:
        return ColoredDigraph(n, ())
    return ColoredDigraph(n, tuple(_compact_colors(arcs)))


def random_tstar_shaped(t: int, m: int, seed: int) -> Tournament:
    """A tournament on v_0..v_t with all forward arcs except v_t -> v_0,
    colored uniformly at random from a palette of size m, compacted."""
    if t < 2:
        raise ValidationError(f"shape needs t >= 2, got {t}")
    rng = random.Random(seed)
    arcs = []
    for i, j in itertools.combinations(range(t + 1), 2):
        tail, head = ((t, 0) if (i, j) == (0, t) else (i, j))
        arcs.append((tail, head, rng.randrange(m)))
    return validate_tournament(ColoredDigraph(t + 1, tuple(_compact_colors(arcs))))


# ---------------------------------------------------------------------------
# Hypothesis checkers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HypothesisReport:
    """Outcome of the subtournament color-count hypothesis check."""

    satisfied: bool
    violating_subset: Optional[tuple[int, ...]] = None
    colors_found: Optional[int] = None

    def __post_init__(self) -> None:
        if self.satisfied != (self.violating_subset is None):
            raise ValidationError("violating subset must be present iff not satisfied")


def check_theorem2_hypothesis(
    t: Tournament,
    slack: int = 1,
    min_size: int = 3,
    max_size: Optional[int] = None,
    require_back_arc: Optional[tuple[int, int]] = None,
    max_vertices: int = SUBSET_MAX_VERTICES,
) -> HypothesisReport:
    """Check that every strongly connected k-vertex subtournament uses at
    least k - slack distinct colors, for min_size <= k <= max_size.

    Subsets are enumerated smallest size first, lexicographically within a
    size; the first violation is reported.  When require_back_arc is given,
    only subsets containing both its endpoints are examined (in a
    single-back-arc tournament every strongly connected subtournament
    contains that arc).
    """
    if t.n > max_vertices:
        raise GuardError(f"subset guard: n={t.n} exceeds {max_vertices}")
    d = t.underlying
    top = t.n if max_size is None else min(max_size, t.n)
    for k in range(min_size, top + 1):
        for subset in itertools.combinations(range(t.n), k):
            if require_back_arc is not None and not set(require_back_arc) <= set(subset):
                continue
            sub, _ = induced_subdigraph(d, subset)
            if not is_strongly_connected(sub):
                continue
            colors = sub.m
            if colors < k - slack:
                return HypothesisReport(False, tuple(subset), colors)
    return HypothesisReport(True)


def check_all_triangles_rainbow(t: Tournament) -> Optional[tuple[int, int, int]]:
    """The lexicographically first directed triangle using fewer than three
    colors, or None when every triangle is rainbow."""
    d = t.underlying
    for a, b, c in itertools.combinations(range(t.n), 3):
        # Orient the triple into a directed triangle if one exists.
        for x, y, z in ((a, b, c), (a, c, b)):
            c1, c2, c3 = d.arc_color(x, y), d.arc_color(y, z), d.arc_color(z, x)
            if None in (c1, c2, c3):
                continue
            if len({c1, c2, c3}) < 3:
                return (a, b, c)
    return None


def _enumerate_cycles(d: ColoredDigraph):
    """Simple directed cycles, each reported once with its minimum vertex
    first; deterministic order (start vertex ascending, then DFS arc order)."""
    adj = d.adjacency()
    for start in range(d.n):
        path = [start]
        on_path = {start}

        def dfs():
            v = path[-1]
            for _, h, _ in adj[v]:
                if h == start and len(path) >= 2:
                    yield list(path)
                elif h > start and h not in on_path:
                    path.append(h)
                    on_path.add(h)
                    yield from dfs()
                    path.pop()
                    on_path.discard(h)

        yield from dfs()


def check_all_cycles_rainbow(
    d: ColoredDigraph, max_vertices: int = CYCLE_MAX_VERTICES
) -> Optional[tuple[int, ...]]:
    """The first simple cycle whose arcs repeat a color, or None."""
    if d.n > max_vertices:
        raise GuardError(f"cycle guard: n={d.n} exceeds {max_vertices}")
    for cycle in _enumerate_cycles(d):
        closed = cycle + [cycle[0]]
        colors = [d.arc_color(u, v) for u, v in zip(closed, closed[1:])]
        if len(set(colors)) < len(colors):
            return tuple(cycle)
    return None


def has_tstar_shape(t: Tournament) -> bool:
    """Whether arcs run v_i -> v_j for all i < j except a back arc v_t -> v_0."""
    d = t.underlying
    last = t.n - 1
    for i, j in itertools.combinations(range(t.n), 2):
        expect = (last, 0) if (i, j) == (0, last) else (i, j)
        if not d.has_arc(*expect):
            return False
    return True


def check_lemma1_instance(t: Tournament) -> Optional[tuple[int, PathWitness]]:
    """On a single-back-arc tournament whose strongly connected k-vertex
    subtournaments all use at least k-1 colors, find the least i with a
    rainbow (v_i, v_{i-1})-path.

    Shape or hypothesis violations raise ValidationError.  A None return
    would contradict the statement being tested.
    """
    if not has_tstar_shape(t):
        raise ValidationError("tournament does not have the single-back-arc shape")
    last = t.n - 1
    # The hypothesis must cover the whole tournament as well: a monochromatic
    # 3-cycle satisfies every proper-subtournament constraint vacuously yet
    # has no backward rainbow path.
    report = check_theorem2_hypothesis(
        t, slack=1, min_size=3, max_size=None, require_back_arc=(last, 0)
    )
    if not report.satisfied:
        raise ValidationError(
            f"coloring hypothesis violated on subset {report.violating_subset}"
            f" with {report.colors_found} colors"
        )
    for i in range(1, last + 1):
        witness = rainbow_reachable(t.underlying, i, i - 1)
        if witness is not None:
            return (i, witness)
    return None


# ---------------------------------------------------------------------------
# Explorers for the open questions
# ---------------------------------------------------------------------------

@dataclass
class ExploreReport:
    """Per-seed outcomes of an explorer run.

    Each line records: seed, whether the instance passed the filter, the
    kernel outcome, and (for counterexamples) the serialized instance text.
    """

    name: str
    lines: list[str] = field(default_factory=list)
    counterexamples: list[tuple[int, str]] = field(default_factory=list)
    tested: int = 0
    filtered_out: int = 0

    def text(self) -> str:
        header = f"# explorer {self.name}: {self.tested} tested, {self.filtered_out} filtered out, {len(self.counterexamples)} counterexamples"
        return "\n".join([header] + self.lines) + "\n"


def explore_problem1(
    n_max: int, m: int, seeds: Iterable[int], arc_prob: float = 0.5
) -> ExploreReport:
    """Sample random colored digraphs, keep those with all cycles rainbow, and
    test rainbow-kernel existence; an instance without one would answer the
    all-cycles-rainbow question negatively."""
    report = ExploreReport("problem1")
    for seed in seeds:
        n = 2 + seed % (n_max - 1) if n_max > 2 else n_max
        d = random_digraph(n, m, seed, arc_prob=arc_prob)
        bad_cycle = check_all_cycles_rainbow(d)
        if bad_cycle is not None:
            report.filtered_out += 1
            report.lines.append(f"{seed}\tfiltered\tnon-rainbow-cycle={','.join(map(str, bad_cycle))}")
            continue
        report.tested += 1
        cert = rainbow_kernel(d)
        if cert is None:
            text = serialize_digraph(d)
            report.counterexamples.append((seed, text))
            report.lines.append(f"{seed}\ttested\tno-kernel\tCOUNTEREXAMPLE")
        else:
            report.lines.append(
                f"{seed}\ttested\tkernel={','.join(map(str, sorted(cert.kernel)))}"
            )
    return report


def explore_fk_conjecture(
    k_range: Sequence[int], seeds: Iterable[int], n: int = 7, m: int = 4
) -> ExploreReport:
    """Sample tournaments with no monochromatic triangle whose strongly
    connected k-subtournaments, k in k_range (k >= 4), all use at least k-2
    colors; tabulate rainbow-kernel outcomes."""
    ks = [k for k in k_range if k >= 4]
    report = ExploreReport("fk")
    for seed in seeds:
        t = random_tournament(n, m, seed)
        if _has_monochromatic_triangle(t):
            report.filtered_out += 1
            report.lines.append(f"{seed}\tfiltered\tmonochromatic-triangle")
            continue
        ok = True
        for k in ks:
            if k > t.n:
                break
            rep = check_theorem2_hypothesis(t, slack=2, min_size=k, max_size=k)
            if not rep.satisfied:
                ok = False
                report.lines.append(
                    f"{seed}\tfiltered\tk={k}-hypothesis-violated"
                )
                break
        if not ok:
            report.filtered_out += 1
            continue
        report.tested += 1
        vertex = rainbow_kernel_tournament(t)
        if vertex is None:
            text = serialize_tournament(t)
            report.counterexamples.append((seed, text))
            report.lines.append(f"{seed}\ttested\tno-kernel\tREFUTING-INSTANCE")
        else:
            report.lines.append(f"{seed}\ttested\tkernel={vertex}")
    return report


def _has_monochromatic_triangle(t: Tournament) -> bool:
    d = t.underlying
    for a, b, c in itertools.combinations(range(t.n), 3):
        for x, y, z in ((a, b, c), (a, c, b)):
            c1, c2, c3 = d.arc_color(x, y), d.arc_color(y, z), d.arc_color(z, x)
            if None in (c1, c2, c3):
                continue
            if c1 == c2 == c3:
                return True
    return False
