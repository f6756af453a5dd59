"""Weak and strong order between flow graphs.

Both deciders are exhaustive searches.  Every witness is re-checked by an
independent verifier before it is returned.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator

from .config import Budget, Counter, default_budget
from .core import FlowGraph, VertexMap, embed_subgraph, verify_embedding
from .errors import SearchBudgetExceeded


@dataclass(frozen=True)
class StSplitting:
    h1_edges: frozenset[int]
    h1_vertices: frozenset[int]
    h2_edges: frozenset[int]
    h2_vertices: frozenset[int]


@dataclass(frozen=True, eq=False)
class WeakWitness:
    splitting: StSplitting
    phi1: VertexMap
    phi2: VertexMap

    def as_text(self) -> str:
        sp = self.splitting
        return (
            f"H1 edges: {' '.join(map(str, sorted(sp.h1_edges)))}\n"
            f"H2 edges: {' '.join(map(str, sorted(sp.h2_edges)))}\n"
            f"phi1 {self.phi1.as_text()}\nphi2 {self.phi2.as_text()}"
        )


@dataclass(frozen=True, eq=False)
class StrongWitness:
    phi_s: VertexMap
    phi_t: VertexMap

    def as_text(self) -> str:
        return f"phi_s {self.phi_s.as_text()}\nphi_t {self.phi_t.as_text()}"


def _part_vertices(a: FlowGraph, edge_ids, anchor: int) -> frozenset[int]:
    vs = {anchor}
    for e in edge_ids:
        vs.update(a.edges[e])
    return frozenset(vs)


def _connected(a: FlowGraph, vertices: frozenset[int], edge_ids) -> bool:
    nb = defaultdict(set)
    for e in edge_ids:
        u, v = a.edges[e]
        nb[u].add(v)
        nb[v].add(u)
    start = next(iter(vertices))
    seen, todo = {start}, [start]
    while todo:
        x = todo.pop()
        for y in nb[x]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen == vertices


def is_st_splitting(a: FlowGraph, sp: StSplitting) -> bool:
    """Independent check of the splitting conditions."""
    all_edges = frozenset(range(a.q))
    return (
        sp.h1_edges | sp.h2_edges == all_edges
        and not sp.h1_edges & sp.h2_edges
        and a.source in sp.h1_vertices
        and a.target in sp.h2_vertices
        and sp.h1_vertices == _part_vertices(a, sp.h1_edges, a.source)
        and sp.h2_vertices == _part_vertices(a, sp.h2_edges, a.target)
        and sp.h1_vertices | sp.h2_vertices == frozenset(range(a.vertex_count))
        and _connected(a, sp.h1_vertices, sp.h1_edges)
        and _connected(a, sp.h2_vertices, sp.h2_edges)
    )


def enumerate_st_splittings(a: FlowGraph, budget: Budget | None = None) -> Iterator[StSplitting]:
    """All (s,t)-splittings, ordered by the bitmask of H2's edge ids (whole graph in H1 first)."""
    budget = budget or default_budget()
    counter = Counter(budget.nodes, "splitting enumeration")
    everything = frozenset(range(a.vertex_count))
    for mask in range(1 << a.q):
        counter.tick()
        e2 = frozenset(e for e in range(a.q) if mask >> e & 1)
        e1 = frozenset(range(a.q)) - e2
        v1 = _part_vertices(a, e1, a.source)
        v2 = _part_vertices(a, e2, a.target)
        if v1 | v2 != everything:
            continue
        if _connected(a, v1, e1) and _connected(a, v2, e2):
            yield StSplitting(e1, v1, e2, v2)


def _check_size(a: FlowGraph, b: FlowGraph, budget: Budget) -> None:
    for g in (a, b):
        if g.vertex_count > budget.max_vertices or g.q > budget.max_edges:
            raise SearchBudgetExceeded(
                f"order decision limited to {budget.max_vertices} vertices / {budget.max_edges} edges, "
                f"got {g.vertex_count} / {g.q}"
            )


def verify_weak_witness(a: FlowGraph, b: FlowGraph, w: WeakWitness) -> bool:
    sp = w.splitting
    return (
        is_st_splitting(a, sp)
        and set(w.phi1.vertex) == set(sp.h1_vertices)
        and set(w.phi1.edge) == set(sp.h1_edges)
        and set(w.phi2.vertex) == set(sp.h2_vertices)
        and set(w.phi2.edge) == set(sp.h2_edges)
        and w.phi1.codomain is b
        and w.phi2.codomain is b
        and verify_embedding(w.phi1, {a.source: b.source})
        and verify_embedding(w.phi2, {a.target: b.target})
        and not set(w.phi1.edge.values()) & set(w.phi2.edge.values())
    )


def verify_strong_witness(a: FlowGraph, b: FlowGraph, w: StrongWitness) -> bool:
    full_v, full_e = set(range(a.vertex_count)), set(range(a.q))
    return all(
        set(m.vertex) == full_v and set(m.edge) == full_e and m.codomain is b
        for m in (w.phi_s, w.phi_t)
    ) and (
        verify_embedding(w.phi_s, {a.source: b.source}) and verify_embedding(w.phi_t, {a.target: b.target})
    )


def weak_leq(a: FlowGraph, b: FlowGraph, budget: Budget | None = None) -> WeakWitness | None:
    """A witness that a is weakly below b, or None."""
    budget = budget or default_budget()
    _check_size(a, b, budget)
    if a.q > b.q:
        return None
    counter = Counter(budget.nodes, "weak order search")
    for sp in enumerate_st_splittings(a, budget):
        for phi1 in embed_subgraph(
            a, sorted(sp.h1_edges), sp.h1_vertices, b, {a.source: b.source}, counter=counter
        ):
            used = frozenset(phi1.edge.values())
            for phi2 in embed_subgraph(
                a, sorted(sp.h2_edges), sp.h2_vertices, b, {a.target: b.target},
                exclude=used, counter=counter,
            ):
                w = WeakWitness(sp, phi1, phi2)
                if not verify_weak_witness(a, b, w):
                    raise AssertionError("weak-order search produced an invalid witness")
                return w
    return None


def strong_leq(a: FlowGraph, b: FlowGraph, budget: Budget | None = None) -> StrongWitness | None:
    """A witness that a is strongly below b, or None."""
    budget = budget or default_budget()
    _check_size(a, b, budget)
    if a.q > b.q or a.vertex_count > b.vertex_count:
        return None
    counter = Counter(budget.nodes, "strong order search")
    every_e, every_v = range(a.q), range(a.vertex_count)
    phi_s = next(embed_subgraph(a, every_e, every_v, b, {a.source: b.source}, counter=counter), None)
    if phi_s is None:
        return None
    phi_t = next(embed_subgraph(a, every_e, every_v, b, {a.target: b.target}, counter=counter), None)
    if phi_t is None:
        return None
    w = StrongWitness(phi_s, phi_t)
    if not verify_strong_witness(a, b, w):
        raise AssertionError("strong-order search produced an invalid witness")
    return w


def weakly_below(a: FlowGraph, b: FlowGraph, budget: Budget | None = None) -> bool:
    return weak_leq(a, b, budget) is not None


def strongly_below(a: FlowGraph, b: FlowGraph, budget: Budget | None = None) -> bool:
    return strong_leq(a, b, budget) is not None
