"""Arc-colored digraph data model, validation, serialization and basic machinery.

Vertices and colors are dense integer identifiers: vertices are 0..n-1 and
every color id below the palette size appears on at least one arc.  All
structures are immutable after construction and safe to share.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence


class ParseError(ValueError):
    """Raised on malformed instance text; the message names the offending line."""


class ValidationError(ValueError):
    """Raised when a structural invariant is violated."""


class GuardError(RuntimeError):
    """Raised when an instance exceeds the size guard of an exhaustive routine."""


Arc = tuple[int, int, int]  # (tail, head, color)


@dataclass(frozen=True)
class ColoredDigraph:
    """A simple loopless digraph whose arcs carry dense integer color ids.

    Arc storage preserves input order; every iteration order derived from it
    is deterministic.
    """

    n: int
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple(tuple(a) for a in self.arcs))
        if self.n < 0:
            raise ValidationError(f"negative vertex count {self.n}")
        seen_pairs: set[tuple[int, int]] = set()
        colors: set[int] = set()
        for tail, head, color in self.arcs:
            if not (0 <= tail < self.n and 0 <= head < self.n):
                raise ValidationError(f"arc ({tail},{head}) out of range for n={self.n}")
            if tail == head:
                raise ValidationError(f"loop at vertex {tail}")
            if (tail, head) in seen_pairs:
                raise ValidationError(f"duplicate arc ({tail},{head})")
            if color < 0:
                raise ValidationError(f"negative color {color} on arc ({tail},{head})")
            seen_pairs.add((tail, head))
            colors.add(color)
        if colors and colors != set(range(max(colors) + 1)):
            missing = sorted(set(range(max(colors) + 1)) - colors)
            raise ValidationError(f"colors are not dense: ids {missing} unused")

    @property
    def m(self) -> int:
        """Number of distinct color ids in use."""
        return max((c for _, _, c in self.arcs), default=-1) + 1

    def vertices(self) -> range:
        return range(self.n)

    def out_arcs(self, v: int) -> Iterator[Arc]:
        return (a for a in self.arcs if a[0] == v)

    def arc_color(self, tail: int, head: int) -> Optional[int]:
        """Color of the arc tail->head, or None when absent."""
        for t, h, c in self.arcs:
            if t == tail and h == head:
                return c
        return None

    def has_arc(self, tail: int, head: int) -> bool:
        return self.arc_color(tail, head) is not None

    def successors(self, v: int) -> list[int]:
        return [h for t, h, _ in self.arcs if t == v]

    def adjacency(self) -> list[list[Arc]]:
        """Out-arc lists per vertex, in input arc order."""
        adj: list[list[Arc]] = [[] for _ in range(self.n)]
        for a in self.arcs:
            adj[a[0]].append(a)
        return adj


@dataclass(frozen=True)
class Tournament:
    """A ColoredDigraph with exactly one arc per unordered vertex pair."""

    underlying: ColoredDigraph

    def __post_init__(self) -> None:
        d = self.underlying
        pairs = {(t, h) for t, h, _ in d.arcs}
        for u, v in itertools.combinations(range(d.n), 2):
            fwd, bwd = (u, v) in pairs, (v, u) in pairs
            if fwd and bwd:
                raise ValidationError(f"mutual arc pair {{{u},{v}}}")
            if not fwd and not bwd:
                raise ValidationError(f"missing arc for pair {{{u},{v}}}")

    @property
    def n(self) -> int:
        return self.underlying.n

    @property
    def m(self) -> int:
        return self.underlying.m


def validate_tournament(d: ColoredDigraph) -> Tournament:
    """Wrap d as a Tournament, or raise ValidationError naming a bad pair."""
    return Tournament(d)


@dataclass(frozen=True)
class PathWitness:
    """A directed path given as its vertex sequence plus per-arc colors.

    colors is None for witnesses over uncolored closure digraphs (single arcs).
    """

    vertices: tuple[int, ...]
    colors: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if self.colors is not None:
            object.__setattr__(self, "colors", tuple(self.colors))
        if len(self.vertices) < 2:
            raise ValidationError("a path witness needs at least two vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValidationError("path witness repeats a vertex")
        if self.colors is not None and len(self.colors) != len(self.vertices) - 1:
            raise ValidationError("color list length does not match arc count")

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def is_rainbow(self) -> bool:
        if self.colors is None:
            return len(self.vertices) == 2
        return len(set(self.colors)) == len(self.colors)

    def is_properly_colored(self) -> bool:
        if self.colors is None:
            return len(self.vertices) == 2
        return all(a != b for a, b in zip(self.colors, self.colors[1:]))

    def validate(self, host, tag: Optional[str] = None) -> None:
        """Check each consecutive pair is a host arc with the recorded color.

        host is a ColoredDigraph (colors required) or any object with a
        has_arc method (uncolored closures).  tag is 'rainbow' or 'pc'.
        """
        for i, (u, v) in enumerate(zip(self.vertices, self.vertices[1:])):
            if self.colors is None:
                if not host.has_arc(u, v):
                    raise ValidationError(f"witness arc ({u},{v}) not in host")
            else:
                c = host.arc_color(u, v)
                if c is None:
                    raise ValidationError(f"witness arc ({u},{v}) not in host")
                if c != self.colors[i]:
                    raise ValidationError(
                        f"witness arc ({u},{v}) recorded color {self.colors[i]}, host has {c}"
                    )
        if tag == "rainbow" and not self.is_rainbow():
            raise ValidationError("witness tagged rainbow repeats a color")
        if tag == "pc" and not self.is_properly_colored():
            raise ValidationError("witness tagged properly-colored repeats consecutive colors")


# ---------------------------------------------------------------------------
# Instance text format
# ---------------------------------------------------------------------------

def _directive_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_digraph(text: str) -> ColoredDigraph:
    """Parse the instance text format; see serialize_digraph for the grammar.

    A 'tournament' header additionally validates the tournament invariant.
    """
    lines = _directive_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty instance: missing header line")
    if len(header) != 3 or header[0] not in ("digraph", "tournament"):
        raise ParseError(f"line {lineno}: expected 'digraph <n> <m>' or 'tournament <n> <m>'")
    try:
        n, m = int(header[1]), int(header[2])
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer header fields")
    arcs: list[Arc] = []
    for lineno, parts in lines:
        if parts[0] != "arc" or len(parts) != 4:
            raise ParseError(f"line {lineno}: expected 'arc <tail> <head> <color>'")
        try:
            tail, head, color = int(parts[1]), int(parts[2]), int(parts[3])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer arc fields")
        if not (0 <= tail < n and 0 <= head < n):
            raise ParseError(f"line {lineno}: vertex out of range for n={n}")
        if tail == head:
            raise ParseError(f"line {lineno}: loop at vertex {tail}")
        if not (0 <= color < m):
            raise ParseError(f"line {lineno}: color {color} out of range for m={m}")
        arcs.append((tail, head, color))
    try:
        d = ColoredDigraph(n, tuple(arcs))
    except ValidationError as exc:
        raise ParseError(str(exc))
    if d.m != m:
        raise ParseError(f"header declares m={m} but {d.m} color ids are in use")
    if header[0] == "tournament":
        try:
            validate_tournament(d)
        except ValidationError as exc:
            raise ParseError(f"header declares a tournament but: {exc}")
    return d


def parse_tournament(text: str) -> Tournament:
    return validate_tournament(parse_digraph(text))


def serialize_digraph(d: ColoredDigraph, header: str = "digraph") -> str:
    """Emit the instance text format:

        digraph <n> <m>        (or: tournament <n> <m>)
        arc <tail> <head> <color>
        ...

    Arcs appear in stored order; the output round-trips through parse_digraph.
    """
    lines = [f"{header} {d.n} {d.m}"]
    lines.extend(f"arc {t} {h} {c}" for t, h, c in d.arcs)
    return "\n".join(lines) + "\n"


def serialize_tournament(t: Tournament) -> str:
    return serialize_digraph(t.underlying, header="tournament")


# ---------------------------------------------------------------------------
# Basic machinery
# ---------------------------------------------------------------------------

def induced_subdigraph(d: ColoredDigraph, s: Iterable[int]) -> tuple[ColoredDigraph, dict[int, int]]:
    """Induced subdigraph on vertex set s, with vertices relabeled densely.

    Returns (subdigraph, relabeling) where relabeling maps old ids to new.
    Colors are compacted to stay dense, preserving ascending color-id order.
    """
    sset = sorted(set(s))
    for v in sset:
        if not (0 <= v < d.n):
            raise ValidationError(f"vertex {v} out of range for n={d.n}")
    relabel = {v: i for i, v in enumerate(sset)}
    kept = [(relabel[t], relabel[h], c) for t, h, c in d.arcs if t in relabel and h in relabel]
    used_colors = sorted({c for _, _, c in kept})
    cmap = {c: i for i, c in enumerate(used_colors)}
    sub = ColoredDigraph(len(sset), tuple((t, h, cmap[c]) for t, h, c in kept))
    return sub, relabel


def strongly_connected_components(d: ColoredDigraph) -> list[list[int]]:
    """Maximal strongly connected sets, ordered so that all arcs between
    components point from earlier to later entries (the last one is a sink
    component of the condensation).
    """
    adj = [[] for _ in range(d.n)]
    for t, h, _ in d.arcs:
        adj[t].append(h)

    index: dict[int, int] = {}
    lowlink: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    components: list[list[int]] = []
    counter = itertools.count()

    for root in range(d.n):
        if root in index:
            continue
        # Iterative Tarjan; emits sink components first.
        work = [(root, iter(adj[root]))]
        index[root] = lowlink[root] = next(counter)
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = lowlink[w] = next(counter)
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(adj[w])))
                    advanced = True
                    break
                elif w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                components.append(sorted(comp))
    components.reverse()
    return components


def is_strongly_connected(d: ColoredDigraph) -> bool:
    return d.n > 0 and len(strongly_connected_components(d)) == 1


def is_acyclic(d: ColoredDigraph) -> bool:
    return all(len(c) == 1 for c in strongly_connected_components(d))


_DOT_STYLES = ("solid", "dashed", "dotted", "bold")


def serialize_dot(d: ColoredDigraph, name: str = "D") -> str:
    """Deterministic DOT export; arcs are labeled and styled by color id."""
    lines = [f"digraph {name} {{"]
    for v in range(d.n):
        lines.append(f"  v{v};")
    for t, h, c in d.arcs:
        style = _DOT_STYLES[c % len(_DOT_STYLES)]
        lines.append(f'  v{t} -> v{h} [label="{c}", style={style}, colorscheme=paired12, color={c % 12 + 1}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
