"""Executable hardness-reduction gadgets with brute-force verifiers.

Two constructions are provided: from a 3-uniform perfect-matching instance to
a rainbow-path instance on an oriented graph, and from a rainbow-path
instance to a rainbow-kernel instance on a tournament.  verify_chain checks
the biconditionals of both steps on guarded instances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .digraph import (
    ColoredDigraph,
    GuardError,
    ParseError,
    PathWitness,
    Tournament,
    ValidationError,
    parse_digraph,
    serialize_digraph,
    validate_tournament,
    _directive_lines,
)
from .kernels import rainbow_kernel_tournament
from .reachability import rainbow_reachable, rainbow_reachable_bruteforce

SOLVER_MAX_EDGES = 20
SOLVER_MAX_GROUPS = 6


@dataclass(frozen=True)
class Hypergraph3:
    """A 3-uniform hypergraph on vertex set {1, ..., 3*n_groups}."""

    n_groups: int
    edges: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(frozenset(e) for e in self.edges))
        if self.n_groups < 1:
            raise ValidationError("a hypergraph needs at least one vertex group")
        if not self.edges:
            raise ValidationError("a hypergraph needs at least one edge")
        seen = set()
        for e in self.edges:
            if len(e) != 3:
                raise ValidationError(f"edge {sorted(e)} is not a 3-set")
            if not all(1 <= v <= 3 * self.n_groups for v in e):
                raise ValidationError(f"edge {sorted(e)} out of range 1..{3 * self.n_groups}")
            if e in seen:
                raise ValidationError(f"duplicate edge {sorted(e)}")
            seen.add(e)

    @property
    def n_vertices(self) -> int:
        return 3 * self.n_groups

    @property
    def n_edges(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class RpogInstance:
    """An arc-colored oriented graph with a rainbow-path query pair (x, y)."""

    digraph: ColoredDigraph
    x: int
    y: int

    def __post_init__(self) -> None:
        if self.x == self.y:
            raise ValidationError("query endpoints must differ")
        for v in (self.x, self.y):
            if not (0 <= v < self.digraph.n):
                raise ValidationError(f"query vertex {v} out of range")
        pairs = {(t, h) for t, h, _ in self.digraph.arcs}
        for t, h in pairs:
            if (h, t) in pairs:
                raise ValidationError(f"2-cycle between {t} and {h}: not an oriented graph")


def parse_hypergraph(text: str) -> Hypergraph3:
    """Parse `hypergraph3 <3n> <m>` followed by `edge <a> <b> <c>` lines."""
    lines = _directive_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty instance: missing header line")
    if len(header) != 3 or header[0] != "hypergraph3":
        raise ParseError(f"line {lineno}: expected 'hypergraph3 <3n> <m>'")
    try:
        nv, m = int(header[1]), int(header[2])
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer header fields")
    if nv % 3 != 0:
        raise ParseError(f"line {lineno}: vertex count {nv} is not a multiple of 3")
    edges = []
    for lineno, parts in lines:
        if parts[0] != "edge" or len(parts) != 4:
            raise ParseError(f"line {lineno}: expected 'edge <a> <b> <c>'")
        try:
            edges.append(frozenset(int(p) for p in parts[1:]))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer edge fields")
    if len(edges) != m:
        raise ParseError(f"header declares m={m} but {len(edges)} edges follow")
    try:
        return Hypergraph3(nv // 3, tuple(edges))
    except ValidationError as exc:
        raise ParseError(str(exc))


def serialize_hypergraph(h: Hypergraph3) -> str:
    lines = [f"hypergraph3 {h.n_vertices} {h.n_edges}"]
    lines.extend("edge " + " ".join(str(v) for v in sorted(e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def parse_rpog(text: str) -> RpogInstance:
    """The core digraph format with a trailing `query <x> <y>` line."""
    body = text.splitlines()
    query_lines = [
        (i, ln) for i, ln in enumerate(body)
        if ln.split("#", 1)[0].strip().startswith("query")
    ]
    if len(query_lines) != 1:
        raise ParseError("an RPOG instance needs exactly one 'query <x> <y>' line")
    idx, qline = query_lines[0]
    parts = qline.split("#", 1)[0].split()
    if len(parts) != 3:
        raise ParseError("expected 'query <x> <y>'")
    try:
        x, y = int(parts[1]), int(parts[2])
    except ValueError:
        raise ParseError("non-integer query fields")
    d = parse_digraph("\n".join(body[:idx] + body[idx + 1:]))
    try:
        return RpogInstance(d, x, y)
    except ValidationError as exc:
        raise ParseError(str(exc))


def serialize_rpog(r: RpogInstance) -> str:
    return serialize_digraph(r.digraph) + f"query {r.x} {r.y}\n"


# ---------------------------------------------------------------------------
# Gadget constructions
# ---------------------------------------------------------------------------

def build_dh(h: Hypergraph3) -> RpogInstance:
    """The oriented-graph gadget for a 3-uniform matching instance.

    Waypoints x_0..x_n are joined, per segment, by one internally disjoint
    length-3 path per hyperedge; the three arcs of the path for edge h_j
    carry the three elements of h_j as colors, in ascending element order.
    A rainbow (x_0, x_n)-path picks one pairwise-disjoint edge per segment,
    so it exists exactly when the hypergraph has a perfect matching.

    The result has 2nm + n + 1 vertices and 3nm arcs.
    """
    n, m = h.n_groups, h.n_edges
    used_elements = sorted(set().union(*h.edges))
    color_of = {e: i for i, e in enumerate(used_elements)}
    # Waypoint x_i is vertex i; the two internal vertices of the path for
    # edge j in segment i follow, segment-major then path-minor.
    def internal(segment: int, j: int, pos: int) -> int:
        return (n + 1) + 2 * m * segment + 2 * j + pos

    arcs = []
    for segment in range(n):
        for j, edge in enumerate(h.edges):
            e1, e2, e3 = sorted(edge)
            a, b = internal(segment, j, 0), internal(segment, j, 1)
            arcs.append((segment, a, color_of[e1]))
            arcs.append((a, b, color_of[e2]))
            arcs.append((b, segment + 1, color_of[e3]))
    d = ColoredDigraph(2 * n * m + n + 1, tuple(arcs))
    return RpogInstance(d, x=0, y=n)


def build_td(r: RpogInstance) -> tuple[Tournament, dict[str, int]]:
    """The tournament gadget for a rainbow-path instance.

    Four apex vertices x', x'', y', y'' are attached to the oriented graph
    and all non-adjacent pairs are completed, using four fresh colors
    (alpha, beta, gamma, omega); the tournament has a rainbow kernel exactly
    when the instance has a rainbow (x, y)-path.
    """
    d, x, y = r.digraph, r.x, r.y
    nd, base_m = d.n, d.m
    alpha, beta, gamma, omega = base_m, base_m + 1, base_m + 2, base_m + 3
    xp, xpp, yp, ypp = nd, nd + 1, nd + 2, nd + 3

    arcs = list(d.arcs)
    existing = {(t, h) for t, h, _ in d.arcs}
    # Complete non-adjacent pairs inside the oriented graph, low id -> high id.
    for u, v in itertools.combinations(range(nd), 2):
        if (u, v) not in existing and (v, u) not in existing:
            arcs.append((u, v, alpha))
    for v in range(nd):
        # x' beats x; every other original vertex beats x'.
        if v == x:
            arcs.append((xp, x, alpha))
        else:
            arcs.append((v, xp, beta))
        arcs.append((v, xpp, alpha))
        arcs.append((v, yp, gamma if v == y else alpha))
        arcs.append((v, ypp, alpha))
    arcs.append((xpp, xp, beta))
    arcs.append((xp, yp, beta))
    arcs.append((xp, ypp, beta))
    arcs.append((yp, xpp, beta))
    arcs.append((ypp, xpp, beta))
    arcs.append((yp, ypp, omega))

    t = validate_tournament(ColoredDigraph(nd + 4, tuple(arcs)))
    return t, {"x'": xp, "x''": xpp, "y'": yp, "y''": ypp, "x": x, "y": y}


# ---------------------------------------------------------------------------
# Brute-force solving and chain verification
# ---------------------------------------------------------------------------

def solve_3dpm_bruteforce(
    h: Hypergraph3,
    max_edges: int = SOLVER_MAX_EDGES,
    max_groups: int = SOLVER_MAX_GROUPS,
) -> Optional[list[int]]:
    """Exhaustive perfect-matching search; returns edge indices or None.

    Candidate combinations are tried in lexicographic index order, so the
    first matching found is deterministic.
    """
    if h.n_edges > max_edges:
        raise GuardError(f"solver guard: m={h.n_edges} exceeds {max_edges}")
    if h.n_groups > max_groups:
        raise GuardError(f"solver guard: n={h.n_groups} exceeds {max_groups}")
    full = frozenset(range(1, h.n_vertices + 1))
    for combo in itertools.combinations(range(h.n_edges), h.n_groups):
        union = frozenset().union(*(h.edges[i] for i in combo))
        if union == full and sum(len(h.edges[i]) for i in combo) == h.n_vertices:
            return list(combo)
    return None


@dataclass(frozen=True)
class ChainReport:
    """The three answers of the reduction chain plus their certificates."""

    hypergraph: Hypergraph3
    matching: Optional[list[int]]
    rainbow_path: Optional[PathWitness]
    kernel_vertex: Optional[int]

    @property
    def agreed(self) -> bool:
        answers = {
            self.matching is not None,
            self.rainbow_path is not None,
            self.kernel_vertex is not None,
        }
        return len(answers) == 1

    def summary(self) -> str:
        def yn(flag: bool) -> str:
            return "yes" if flag else "no"

        return (
            f"3dpm={yn(self.matching is not None)}\t"
            f"rainbow-path={yn(self.rainbow_path is not None)}\t"
            f"rainbow-kernel={yn(self.kernel_vertex is not None)}"
        )


def verify_chain(h: Hypergraph3, use_bruteforce_path: bool = True) -> ChainReport:
    """Run both reductions end-to-end and assert the three-way agreement:
    perfect matching, rainbow (x,y)-path in the oriented-graph gadget, and
    rainbow kernel in the tournament gadget.

    A disagreement falsifies the implementation and raises ValidationError
    naming the mismatched pair.
    """
    matching = solve_3dpm_bruteforce(h)
    r = build_dh(h)
    if use_bruteforce_path:
        # The gadget exceeds the default oracle guard already at small sizes,
        # but its simple paths are few; lift the guard to the instance size.
        path = rainbow_reachable_bruteforce(r.digraph, r.x, r.y, max_vertices=r.digraph.n)
    else:
        path = rainbow_reachable(r.digraph, r.x, r.y)
    t, _labels = build_td(r)
    kernel = rainbow_kernel_tournament(t)
    report = ChainReport(h, matching, path, kernel)
    if (matching is None) != (path is None):
        raise ValidationError(
            f"chain mismatch between 3dpm and rainbow-path: {report.summary()}"
        )
    if (path is None) != (kernel is None):
        raise ValidationError(
            f"chain mismatch between rainbow-path and rainbow-kernel: {report.summary()}"
        )
    return report


def enumerate_hypergraphs(max_groups: int, max_edges: int) -> Iterator[Hypergraph3]:
    """All 3-uniform hypergraphs with n_groups <= max_groups and at most
    max_edges edges, in deterministic order."""
    for n in range(1, max_groups + 1):
        universe = list(itertools.combinations(range(1, 3 * n + 1), 3))
        for m in range(1, max_edges + 1):
            for combo in itertools.combinations(universe, m):
                yield Hypergraph3(n, tuple(frozenset(e) for e in combo))
