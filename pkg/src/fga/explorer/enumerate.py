"""Exhaustive enumeration of flow graphs up to isomorphism.

Connected multigraphs are grown one edge at a time: every connected
multigraph with ``q >= 1`` edges arises from one with ``q - 1`` edges either
by adding an edge between existing vertices (drop a non-bridge, or any
cycle edge) or by adding a pendant edge to a fresh vertex (drop a leaf of a
tree).  Each level is deduplicated by unanchored canonical form, then every
(source, target) choice is tried and deduplicated by the flow-graph key.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from ..config import Budget, default_budget
from ..core import FlowGraph, _canonical_labeling, _encode, canonical_key, is_st_flow_graph, key_from_bytes


@dataclass(frozen=True)
class UniverseSpec:
    max_edges: int
    max_vertices: int | None = None
    st_only: bool = False
    include_infinitesimals: bool = True
    min_edges: int = 0

    def __post_init__(self):
        if self.max_edges < 0:
            raise ValueError("max_edges must be nonnegative")
        if self.max_vertices is not None and self.max_vertices < 1:
            raise ValueError("max_vertices must be positive")

    @property
    def vertex_bound(self) -> int:
        # a connected graph with q edges has at most q + 1 vertices
        bound = self.max_edges + 1
        return bound if self.max_vertices is None else min(bound, self.max_vertices)

    def describe(self) -> str:
        parts = [f"edges<={self.max_edges}", f"vertices<={self.vertex_bound}"]
        if self.min_edges:
            parts.insert(0, f"edges>={self.min_edges}")
        if self.st_only:
            parts.append("st-only")
        if not self.include_infinitesimals:
            parts.append("no-infinitesimals")
        return ",".join(parts)


def _unanchored_key(g: FlowGraph, budget: Budget) -> bytes:
    cert, _ = _canonical_labeling(g, budget, pinned=False)
    return _encode(cert)


@lru_cache(maxsize=None)
def connected_multigraphs(q: int, max_vertices: int) -> tuple[FlowGraph, ...]:
    """Unanchored connected directed multigraphs with exactly ``q`` edges, one per class.

    Source and target of the returned values are meaningless (both 0).
    """
    budget = default_budget()
    if q == 0:
        return (FlowGraph(1, (), 0, 0),)
    seen: dict[bytes, FlowGraph] = {}
    for g in connected_multigraphs(q - 1, max_vertices):
        n = g.vertex_count
        grown = [FlowGraph(n, g.edges + ((u, v),), 0, 0) for u in range(n) for v in range(n)]
        if n < max_vertices:
            for u in range(n):
                grown.append(FlowGraph(n + 1, g.edges + ((u, n),), 0, 0))
                grown.append(FlowGraph(n + 1, g.edges + ((n, u),), 0, 0))
        for h in grown:
            key = _unanchored_key(h, budget)
            if key not in seen:
                seen[key] = key_from_bytes(key)
    return tuple(seen[k] for k in sorted(seen))


@lru_cache(maxsize=None)
def _flow_keys(q: int, max_vertices: int) -> tuple[bytes, ...]:
    keys: set[bytes] = set()
    for g in connected_multigraphs(q, max_vertices):
        for s in range(g.vertex_count):
            for t in range(g.vertex_count):
                keys.add(canonical_key(FlowGraph(g.vertex_count, g.edges, s, t)))
    return tuple(sorted(keys))


def enumerate_flow_graphs(spec: UniverseSpec, budget: Budget | None = None) -> Iterator[FlowGraph]:
    """One canonical representative per isomorphism class, in ascending canonical-key order."""
    keys: list[bytes] = []
    for q in range(spec.min_edges, spec.max_edges + 1):
        keys.extend(_flow_keys(q, spec.vertex_bound))
    keys.sort()
    for key in keys:
        a = key_from_bytes(key)
        if not spec.include_infinitesimals and a.is_infinitesimal:
            continue
        if spec.st_only and not is_st_flow_graph(a, budget)[0]:
            continue
        yield a


def universe(spec: UniverseSpec, budget: Budget | None = None) -> list[FlowGraph]:
    return list(enumerate_flow_graphs(spec, budget))
