"""Rainbow and properly-colored path existence engines with brute-force oracles.

The rainbow engine searches walk states (vertex, set of used colors); deleting
any closed subwalk from a rainbow walk leaves a rainbow walk, so walk
reachability coincides with simple-path reachability and every returned
witness is a simple path.

The properly-colored engine is the layered construction over states (vertex,
color): layer k relates (v', c') to (v'', c'') exactly when there is a
properly colored walk of length at most k from v' to v'' whose first arc is
colored c' and last arc is colored c''.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .digraph import (
    ColoredDigraph,
    GuardError,
    PathWitness,
    Tournament,
)

ORACLE_MAX_VERTICES = 12
CLOSURE_MAX_COLORS = 16


def _simplify_walk(d: ColoredDigraph, walk: list[int]) -> PathWitness:
    """Excise closed subwalks, keeping the tail end of the walk intact."""
    path: list[int] = []
    for v in walk:
        if v in path:
            path = path[: path.index(v) + 1]
        else:
            path.append(v)
    colors = [d.arc_color(u, v) for u, v in zip(path, path[1:])]
    return PathWitness(tuple(path), tuple(colors))


def rainbow_reachable(d: ColoredDigraph, u: int, v: int) -> Optional[PathWitness]:
    """A rainbow (u,v)-path witness, or None when no rainbow path exists.

    BFS over (vertex, color-bitset) states in arc input order; states whose
    color set contains an already-reached subset at the same vertex are
    pruned.  The first witness reached is returned, so output is
    deterministic.
    """
    if u == v:
        raise ValueError("endpoints of a rainbow query must differ")
    adj = d.adjacency()
    reached: list[list[int]] = [[] for _ in range(d.n)]
    pred: dict[tuple[int, int], tuple[int, int]] = {}
    queue: deque[tuple[int, int]] = deque([(u, 0)])
    reached[u].append(0)
    while queue:
        w, mask = queue.popleft()
        for _, h, c in adj[w]:
            bit = 1 << c
            if mask & bit:
                continue
            nmask = mask | bit
            if any(old & nmask == old for old in reached[h]):
                continue
            reached[h].append(nmask)
            pred[(h, nmask)] = (w, mask)
            if h == v:
                walk = [h]
                state = (h, nmask)
                while state != (u, 0):
                    state = pred[state]
                    walk.append(state[0])
                walk.reverse()
                return _simplify_walk(d, walk)
            queue.append((h, nmask))
    return None


def rainbow_reachable_bruteforce(
    d: ColoredDigraph, u: int, v: int, max_vertices: int = ORACLE_MAX_VERTICES
) -> Optional[PathWitness]:
    """Exhaustive simple-path enumeration oracle for rainbow reachability."""
    if d.n > max_vertices:
        raise GuardError(f"oracle guard: n={d.n} exceeds {max_vertices}")
    if u == v:
        raise ValueError("endpoints of a rainbow query must differ")
    adj = d.adjacency()

    path = [u]
    colors: list[int] = []

    def dfs() -> Optional[PathWitness]:
        w = path[-1]
        for _, h, c in adj[w]:
            if h in path or c in colors:
                continue
            path.append(h)
            colors.append(c)
            if h == v:
                found = PathWitness(tuple(path), tuple(colors))
            else:
                found = dfs()
            path.pop()
            colors.pop()
            if found is not None:
                return found
        return None

    return dfs()


def rainbow_reachability_matrix(
    d: ColoredDigraph, max_colors: int = CLOSURE_MAX_COLORS
) -> np.ndarray:
    """All-pairs rainbow reachability as an n-by-n boolean matrix.

    Dynamic program over exact color sets: walks whose color set equals a
    given mask are extended one fresh color at a time.  Exponential in the
    palette size only.
    """
    if d.m > max_colors:
        raise GuardError(f"closure guard: m={d.m} exceeds {max_colors}")
    n, m = d.n, d.m
    if n == 0:
        return np.zeros((0, 0), dtype=bool)
    step = [np.zeros((n, n), dtype=np.uint8) for _ in range(m)]
    for t, h, c in d.arcs:
        step[c][t, h] = 1
    exact: dict[int, np.ndarray] = {0: np.eye(n, dtype=np.uint8)}
    total = np.zeros((n, n), dtype=bool)
    for mask in range(1 << m):
        reach = exact.pop(mask, None)
        if reach is None or not reach.any():
            continue
        if mask:
            total |= reach.astype(bool)
        for c in range(m):
            bit = 1 << c
            if mask & bit:
                continue
            ext = (reach @ step[c] > 0).astype(np.uint8)
            if not ext.any():
                continue
            key = mask | bit
            if key in exact:
                exact[key] |= ext
            else:
                exact[key] = ext
    np.fill_diagonal(total, False)
    return total


# ---------------------------------------------------------------------------
# Properly colored paths: the layered state construction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PcState:
    """A (vertex, color) state of the layered construction."""

    vertex: int
    last_color: int


class LayeredPcRelation:
    """The layer sequence of the properly-colored walk relation of a tournament.

    layer(k) holds the relation after k extension rounds; layer(0) is empty
    and layer(1) relates single arcs (v',c) -> (v'',c).  The relation is
    monotone in k and the last layer has index n-1.

    Rows are stored as integer bitsets over the n*m states.
    """

    def __init__(self, n: int, m: int, layers: list[list[int]]):
        self.n = n
        self.m = m
        self._layers = layers

    @property
    def last_layer(self) -> int:
        return len(self._layers) - 1

    def _index(self, s: PcState) -> int:
        if not (0 <= s.vertex < self.n and 0 <= s.last_color < self.m):
            raise ValueError(f"state {s} out of range for n={self.n}, m={self.m}")
        return s.vertex * self.m + s.last_color

    def contains(self, a: PcState, b: PcState, layer: Optional[int] = None) -> bool:
        k = self.last_layer if layer is None else layer
        return bool(self._layers[k][self._index(a)] >> self._index(b) & 1)

    def layer_pairs(self, k: int) -> set[tuple[PcState, PcState]]:
        pairs = set()
        for i, row in enumerate(self._layers[k]):
            j = 0
            while row:
                if row & 1:
                    pairs.add(
                        (PcState(i // self.m, i % self.m), PcState(j // self.m, j % self.m))
                    )
                row >>= 1
                j += 1
        return pairs

    def layer_sizes(self) -> list[int]:
        return [sum(row.bit_count() for row in rows) for rows in self._layers]

    def vertex_relation(self) -> np.ndarray:
        """Project the final layer to an n-by-n vertex reachability matrix."""
        n, m = self.n, self.m
        out = np.zeros((n, n), dtype=bool)
        vmask = (1 << m) - 1
        for i, row in enumerate(self._layers[-1]):
            v = i // m
            for w in range(n):
                if row >> (w * m) & vmask:
                    out[v, w] = True
        return out


def pc_closure_layers(t: Tournament) -> LayeredPcRelation:
    """Build the layer sequence up to index n-1 for a colored tournament.

    The base layer relates (v',c) to (v'',c) for each arc v'v'' colored c.
    Each round adds ((v',c'),(v'',c'')) whenever some state (v,c) satisfies
    ((v',c'),(v,c)) already present, the arc v->v'' exists with color c'',
    and c differs from c''.  Only pairs added in the previous round are
    extended, so each pair is processed once and total work stays within
    the cubic-in-states bound.
    """
    d = t.underlying
    n, m = d.n, max(d.m, 1)
    size = n * m
    # extend[t] = bitset of states (v'', c'') reachable by one proper step
    # from a walk currently ending in state t.
    extend = [0] * size
    base = [0] * size
    for tail, head, color in d.arcs:
        base[tail * m + color] |= 1 << (head * m + color)
        bit = 1 << (head * m + color)
        for c in range(m):
            if c != color:
                extend[tail * m + c] |= bit
    layers: list[list[int]] = [[0] * size]
    if n >= 2:
        rows = list(base)
        layers.append(list(rows))
        frontier: list[tuple[int, int]] = []
        for a, row in enumerate(rows):
            j = 0
            r = row
            while r:
                if r & 1:
                    frontier.append((a, j))
                r >>= 1
                j += 1
        for _ in range(2, n):
            grown: dict[int, int] = {}
            for a, tstate in frontier:
                grown[a] = grown.get(a, 0) | extend[tstate]
            frontier = []
            for a, bits in grown.items():
                fresh = bits & ~rows[a]
                if not fresh:
                    continue
                rows[a] |= fresh
                j = 0
                while fresh:
                    if fresh & 1:
                        frontier.append((a, j))
                    fresh >>= 1
                    j += 1
            layers.append(list(rows))
    return LayeredPcRelation(n, m, layers)


def pc_reachable(t: Tournament, u: int, v: int, layers: Optional[LayeredPcRelation] = None) -> bool:
    """Whether the final layer relates some (u, c') to some (v, c'')."""
    if u == v:
        raise ValueError("endpoints of a pc query must differ")
    rel = pc_closure_layers(t) if layers is None else layers
    return bool(rel.vertex_relation()[u, v])


def pc_reachable_bruteforce(
    d: ColoredDigraph, u: int, v: int, max_vertices: int = ORACLE_MAX_VERTICES
) -> Optional[PathWitness]:
    """Exhaustive simple properly-colored path oracle."""
    if d.n > max_vertices:
        raise GuardError(f"oracle guard: n={d.n} exceeds {max_vertices}")
    if u == v:
        raise ValueError("endpoints of a pc query must differ")
    adj = d.adjacency()

    path = [u]
    colors: list[int] = []

    def dfs() -> Optional[PathWitness]:
        w = path[-1]
        for _, h, c in adj[w]:
            if h in path or (colors and colors[-1] == c):
                continue
            path.append(h)
            colors.append(c)
            if h == v:
                found = PathWitness(tuple(path), tuple(colors))
            else:
                found = dfs()
            path.pop()
            colors.pop()
            if found is not None:
                return found
        return None

    return dfs()


def pc_walk_table_bruteforce(d: ColoredDigraph, max_length: int) -> set[tuple[PcState, PcState]]:
    """Independent oracle: state pairs joined by a properly colored walk of
    length at most max_length with matching first and last arc colors.

    Straightforward breadth-first expansion over (first color, current vertex,
    last color) triples; no shared code with the layered construction.
    """
    frontier = {(t, c, h, c) for t, h, c in d.arcs}
    table = set(frontier)
    arcs = list(d.arcs)
    for _ in range(max_length - 1):
        grown = set()
        for start, first, cur, last in frontier:
            for tail, head, color in arcs:
                if tail == cur and color != last:
                    item = (start, first, head, color)
                    if item not in table:
                        grown.add(item)
        if not grown:
            break
        table |= grown
        frontier = grown
    return {
        (PcState(s, fc), PcState(e, lc)) for s, fc, e, lc in table
    }
