"""Closure constructions and kernel computations.

A kernel of an uncolored digraph is an independent vertex set that every
outside vertex can reach by a single arc.  Rainbow kernels and PCP-kernels
replace the arc by a rainbow path or a properly colored path; both reduce to
plain kernels of the corresponding closure digraph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .digraph import (
    ColoredDigraph,
    GuardError,
    PathWitness,
    Tournament,
    ValidationError,
    is_acyclic,
)
from .reachability import (
    LayeredPcRelation,
    pc_closure_layers,
    rainbow_reachability_matrix,
    rainbow_reachable,
)

KERNEL_MAX_VERTICES = 24


@dataclass(frozen=True)
class ClosureDigraph:
    """A simple loopless uncolored arc relation on vertices 0..n-1."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple(tuple(a) for a in self.arcs))
        seen = set()
        for t, h in self.arcs:
            if not (0 <= t < self.n and 0 <= h < self.n):
                raise ValidationError(f"arc ({t},{h}) out of range for n={self.n}")
            if t == h:
                raise ValidationError(f"loop at vertex {t}")
            if (t, h) in seen:
                raise ValidationError(f"duplicate arc ({t},{h})")
            seen.add((t, h))

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self._arcset()

    def _arcset(self) -> frozenset[tuple[int, int]]:
        cached = getattr(self, "_cached_arcset", None)
        if cached is None:
            cached = frozenset(self.arcs)
            object.__setattr__(self, "_cached_arcset", cached)
        return cached

    @classmethod
    def from_matrix(cls, reach: np.ndarray) -> "ClosureDigraph":
        n = reach.shape[0]
        arcs = tuple(
            (int(i), int(j)) for i, j in zip(*np.nonzero(reach)) if i != j
        )
        return cls(n, arcs)

    def in_degrees(self) -> list[int]:
        degs = [0] * self.n
        for _, h in self.arcs:
            degs[h] += 1
        return degs


@dataclass(frozen=True)
class KernelCertificate:
    """A kernel vertex set plus one absorbing path witness per outside vertex."""

    kernel: frozenset[int]
    witnesses: dict[int, PathWitness]

    def validate(self, host, tag: Optional[str] = None) -> None:
        """Re-check absorption structurally; independence is host-specific and
        checked by the dedicated validators below."""
        for v, w in self.witnesses.items():
            if w.start != v:
                raise ValidationError(f"witness for {v} starts at {w.start}")
            if w.end not in self.kernel:
                raise ValidationError(f"witness for {v} ends outside the kernel")
            w.validate(host, tag=tag)
        outside = set(range(getattr(host, "n"))) - set(self.kernel)
        if outside != set(self.witnesses):
            raise ValidationError("witness map does not cover exactly the outside vertices")


def rainbow_closure(d: ColoredDigraph) -> ClosureDigraph:
    """The uncolored digraph with an arc u->v exactly when d has a rainbow
    (u,v)-path."""
    return ClosureDigraph.from_matrix(rainbow_reachability_matrix(d))


def pc_closure(t: Tournament, layers: Optional[LayeredPcRelation] = None) -> ClosureDigraph:
    """The properly-colored path closure of a tournament, via the layered
    state construction."""
    rel = pc_closure_layers(t) if layers is None else layers
    return ClosureDigraph.from_matrix(rel.vertex_relation())


def kernel_of(
    g: ClosureDigraph, max_vertices: int = KERNEL_MAX_VERTICES
) -> Optional[KernelCertificate]:
    """Brute-force kernel search over candidate sets, smallest size first and
    lexicographically least within a size; witnesses are single arcs.

    Kernel existence is NP-complete in general, hence the size guard.
    """
    if g.n > max_vertices:
        raise GuardError(f"kernel guard: n={g.n} exceeds {max_vertices}")
    if g.n == 0:
        return KernelCertificate(frozenset(), {})
    arcset = {(t, h) for t, h in g.arcs}
    out_to: list[list[int]] = [[] for _ in range(g.n)]
    for t, h in g.arcs:
        out_to[t].append(h)
    for size in range(1, g.n + 1):
        for cand in itertools.combinations(range(g.n), size):
            cset = set(cand)
            if any(
                (a, b) in arcset or (b, a) in arcset
                for a, b in itertools.combinations(cand, 2)
            ):
                continue
            witnesses = {}
            for v in range(g.n):
                if v in cset:
                    continue
                target = next((h for h in sorted(out_to[v]) if h in cset), None)
                if target is None:
                    break
                witnesses[v] = PathWitness((v, target), None)
            else:
                return KernelCertificate(frozenset(cand), witnesses)
    return None


def rainbow_kernel(
    d: ColoredDigraph, max_vertices: int = KERNEL_MAX_VERTICES
) -> Optional[KernelCertificate]:
    """A rainbow kernel of d, or None; d has one iff its rainbow closure has a
    kernel.  Witnesses are recomputed as rainbow paths in d."""
    closure = rainbow_closure(d)
    plain = kernel_of(closure, max_vertices=max_vertices)
    if plain is None:
        return None
    witnesses = {}
    for v, arc_witness in plain.witnesses.items():
        path = rainbow_reachable(d, v, arc_witness.end)
        if path is None:
            raise ValidationError(
                f"closure arc ({v},{arc_witness.end}) has no rainbow witness"
            )
        witnesses[v] = path
    return KernelCertificate(plain.kernel, witnesses)


def rainbow_kernel_tournament(t: Tournament) -> Optional[int]:
    """The least vertex that all others reach by a rainbow path, or None.

    In a tournament a rainbow kernel is a single vertex, so it exists exactly
    when the rainbow closure has a vertex of in-degree n-1.
    """
    reach = rainbow_reachability_matrix(t.underlying)
    for v in range(t.n):
        if int(reach[:, v].sum()) == t.n - 1:
            return v
    return None


def pcp_kernel_tournament(t: Tournament) -> Optional[int]:
    """The least vertex of in-degree n-1 in the PC closure, or None."""
    closure = pc_closure(t)
    for v, deg in enumerate(closure.in_degrees()):
        if deg == t.n - 1:
            return v
    return None


def acyclic_rainbow_kernel(d: ColoredDigraph) -> KernelCertificate:
    """Sink-peeling on an acyclic digraph: kernel members are collected from
    the sinks upward, skipping every vertex that already has a rainbow path
    into the kernel.  The result re-validates as a rainbow kernel.
    """
    if not is_acyclic(d):
        raise ValidationError("input digraph has a cycle")
    # Peel sink levels: the sinks, then the vertices whose successors were all
    # peeled, and so on.  Within this order a vertex joins the kernel exactly
    # when it has no rainbow path into the kernel built so far.  Every later
    # vertex is upstream of the kernel, so no path can leave the kernel either
    # way and independence holds.  (Adding a whole sink level at once is not
    # sound: two same-level vertices can be joined by a rainbow path through
    # previously peeled vertices.)
    remaining = set(range(d.n))
    order: list[int] = []
    while remaining:
        level = sorted(
            v for v in remaining if not any(h in remaining for h in d.successors(v))
        )
        order.extend(level)
        remaining -= set(level)
    kernel: set[int] = set()
    witnesses: dict[int, PathWitness] = {}
    for v in order:
        for s in sorted(kernel):
            path = rainbow_reachable(d, v, s)
            if path is not None:
                witnesses[v] = path
                break
        else:
            kernel.add(v)
    cert = KernelCertificate(frozenset(kernel), witnesses)
    validate_rainbow_kernel(d, cert)
    return cert


def validate_rainbow_kernel(d: ColoredDigraph, cert: KernelCertificate) -> None:
    """Independence and absorption of a rainbow-kernel certificate against its
    host digraph; raises ValidationError on any failure."""
    cert.validate(d, tag="rainbow")
    for a, b in itertools.permutations(sorted(cert.kernel), 2):
        if rainbow_reachable(d, a, b) is not None:
            raise ValidationError(f"kernel vertices {a} and {b} joined by a rainbow path")
