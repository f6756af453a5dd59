"""Splitting vertices and edges, ranks, the canonical sum decomposition, st-cores and standardness."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

from .algebra import sum_all
from .config import Budget, Counter, default_budget
from .core import FlowGraph, _find, is_st_flow_graph, isomorphic, st_edge_flags, trivial
from .errors import CoreUndefined, NotASplittingVertex


def _components_without(a: FlowGraph, w: int | None = None, skip_edge: int | None = None) -> list[int]:
    """Union-find roots per vertex after deleting vertex ``w`` and/or edge ``skip_edge``.

    A deleted vertex gets root -1.
    """
    parent = list(range(a.vertex_count))
    for i, (u, v) in enumerate(a.edges):
        if i == skip_edge or u == w or v == w:
            continue
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[ru] = rv
    return [-1 if x == w else _find(parent, x) for x in range(a.vertex_count)]


@dataclass(frozen=True)
class Partition:
    """The three parts left after deleting a splitting vertex w."""

    s_vertices: frozenset[int]
    t_vertices: frozenset[int]
    eps_vertices: frozenset[int]
    s_edges: frozenset[int]
    t_edges: frozenset[int]
    eps_edges: frozenset[int]


@dataclass(frozen=True)
class SplitVertexSet:
    members: tuple[int, ...]
    parts: dict[int, Partition]

    def __contains__(self, w: object) -> bool:
        return w in self.parts

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


@dataclass(frozen=True)
class RankPair:
    r_s: int
    r_t: int


def _partition(a: FlowGraph, w: int) -> Partition | None:
    s, t = a.source, a.target
    if s == t or w in (s, t):
        return None
    roots = _components_without(a, w)
    rs, rt = roots[s], roots[t]
    if rs == rt:
        return None
    sv = frozenset(x for x in range(a.vertex_count) if roots[x] == rs)
    tv = frozenset(x for x in range(a.vertex_count) if roots[x] == rt)
    ev = frozenset(x for x in range(a.vertex_count) if x != w and x not in sv and x not in tv)
    se, te, ee = set(), set(), set()
    for i, (u, v) in enumerate(a.edges):
        if u == w or v == w:
            continue
        (se if u in sv else te if u in tv else ee).add(i)
    return Partition(sv, tv, ev, frozenset(se), frozenset(te), frozenset(ee))


def splitting_vertices(a: FlowGraph) -> SplitVertexSet:
    """All w other than s, t whose deletion puts s and t in different components."""
    parts = {}
    for w in range(a.vertex_count):
        p = _partition(a, w)
        if p is not None:
            parts[w] = p
    return SplitVertexSet(tuple(sorted(parts)), parts)


def is_splitting_vertex(a: FlowGraph, w: int) -> bool:
    return _partition(a, w) is not None


def _require(a: FlowGraph, w: int) -> Partition:
    if not (0 <= w < a.vertex_count):
        raise NotASplittingVertex(f"vertex {w} does not exist")
    p = _partition(a, w)
    if p is None:
        raise NotASplittingVertex(f"vertex {w} is not a splitting vertex")
    return p


def _sides(a: FlowGraph, w: int, p: Partition) -> tuple[list[int], list[int]]:
    """Edge ids of the s-side summand and of the t-side summand at w.

    Loops at w belong to the s side, like the components reaching neither s nor t.
    """
    left, right = [], []
    for i, (u, v) in enumerate(a.edges):
        if u == w or v == w:
            other = v if u == w else u
            (right if other in p.t_vertices else left).append(i)
        elif i in p.t_edges:
            right.append(i)
        else:
            left.append(i)
    return left, right


def _subgraph(a: FlowGraph, edge_ids: Sequence[int], src: int, tgt: int) -> FlowGraph:
    """The sub-flow-graph on ``edge_ids`` with the given source and target, relabeled by sorted vertex id."""
    vs = {src, tgt}
    for e in edge_ids:
        vs.update(a.edges[e])
    lab = {x: i for i, x in enumerate(sorted(vs))}
    edges = tuple((lab[a.edges[e][0]], lab[a.edges[e][1]]) for e in edge_ids)
    return FlowGraph(len(lab), edges, lab[src], lab[tgt])


def split_at(a: FlowGraph, w: int) -> tuple[FlowGraph, FlowGraph]:
    """(A_s^w, A_t^w): w becomes the target of the first and the source of the second."""
    p = _require(a, w)
    left, right = _sides(a, w, p)
    return _subgraph(a, left, a.source, w), _subgraph(a, right, w, a.target)


def rank(a: FlowGraph, w: int) -> RankPair:
    p = _require(a, w)
    chi = splitting_vertices(a)
    return RankPair(
        sum(1 for x in chi if x in p.s_vertices),
        sum(1 for x in chi if x in p.t_vertices),
    )


@dataclass(frozen=True)
class DecompositionSeq:
    components: tuple[FlowGraph, ...]
    cuts: tuple[int, ...] = ()
    edge_ids: tuple[tuple[int, ...], ...] = ()

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i: int) -> FlowGraph:
        return self.components[i]

    def recompose(self) -> FlowGraph:
        return sum_all(self.components)


def canonical_decomposition(a: FlowGraph) -> DecompositionSeq:
    """Cut at every splitting vertex, in order of increasing s-rank.

    Each edge goes to the first cut whose s side contains it.
    """
    chi = splitting_vertices(a)
    if not chi.members:
        return DecompositionSeq((a,), (), (tuple(range(a.q)),))
    # the s-rank of w is the number of splitting vertices on its s side
    order = sorted(chi, key=lambda w: sum(1 for x in chi if x in chi.parts[w].s_vertices))
    owner = [len(order)] * a.q
    for i in reversed(range(len(order))):
        w = order[i]
        left, _ = _sides(a, w, chi.parts[w])
        for e in left:
            owner[e] = i
    ends = [a.source, *order, a.target]
    comps, ids = [], []
    for i in range(len(order) + 1):
        mine = [e for e in range(a.q) if owner[e] == i]
        comps.append(_subgraph(a, mine, ends[i], ends[i + 1]))
        ids.append(tuple(mine))
    return DecompositionSeq(tuple(comps), tuple(order), tuple(ids))


def nested_decomposition(a: FlowGraph) -> tuple[FlowGraph, ...]:
    """Decomposition by repeatedly splitting the remainder at its rank-0 splitting vertex."""
    out = []
    rest = a
    while True:
        chi = splitting_vertices(rest)
        if not chi.members:
            out.append(rest)
            return tuple(out)
        first = next(w for w in chi if rank(rest, w).r_s == 0)
        head, rest = split_at(rest, first)
        out.append(head)


# --------------------------------------------------------------------------
# un-gluing: every way of writing A as B + C


@dataclass(frozen=True)
class SumSplit:
    left: FlowGraph
    right: FlowGraph
    glue: int
    left_edges: tuple[int, ...]
    right_edges: tuple[int, ...]


def _connected_on(a: FlowGraph, vertices: set[int], edge_ids: Sequence[int]) -> bool:
    parent = {x: x for x in vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    groups = len(vertices)
    for e in edge_ids:
        u, v = a.edges[e]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            groups -= 1
    return groups == 1


def sum_splits(a: FlowGraph, budget: Budget | None = None) -> Iterator[SumSplit]:
    """Every pair (B, C) with B + C == a, read off as an edge bipartition meeting in one vertex.

    The two parts share exactly the glue vertex, B contains the source and C
    the target.  Exponential in q; bounded by the node budget.
    """
    budget = budget or default_budget()
    counter = Counter(budget.nodes, "sum decomposition search")
    s, t = a.source, a.target
    for mask in range(1 << a.q):
        counter.tick()
        le = [e for e in range(a.q) if mask >> e & 1]
        re = [e for e in range(a.q) if not mask >> e & 1]
        lv = {s}
        for e in le:
            lv.update(a.edges[e])
        rv = {t}
        for e in re:
            rv.update(a.edges[e])
        common = lv & rv
        if len(common) != 1 or len(lv | rv) != a.vertex_count:
            continue
        (w,) = common
        if not (_connected_on(a, lv, le) and _connected_on(a, rv, re)):
            continue
        yield SumSplit(_subgraph(a, le, s, w), _subgraph(a, re, w, t), w, tuple(le), tuple(re))


class Mode(enum.Enum):
    SPLITTING_VERTEX = "splitting-vertex"
    DEFINITIONAL = "definitional"


def is_oplus_irreducible(
    a: FlowGraph, mode: Mode | str = Mode.SPLITTING_VERTEX, budget: Budget | None = None
) -> bool:
    mode = Mode(mode)
    if mode is Mode.SPLITTING_VERTEX:
        return not splitting_vertices(a).members
    return not any(sp.left.q and sp.right.q for sp in sum_splits(a, budget))


def splitting_edges(a: FlowGraph) -> frozenset[int]:
    """Edges whose removal leaves exactly two components, one holding s and the other t."""
    if a.source == a.target:
        return frozenset()
    out = set()
    for i, (u, v) in enumerate(a.edges):
        if u == v:
            continue
        roots = _components_without(a, skip_edge=i)
        if len(set(roots)) == 2 and roots[a.source] != roots[a.target]:
            out.add(i)
    return frozenset(out)


def cut_vertices(a: FlowGraph) -> frozenset[int]:
    """Vertices other than s, t whose deletion disconnects the graph."""
    out = set()
    for w in range(a.vertex_count):
        if w in (a.source, a.target):
            continue
        roots = _components_without(a, w)
        if len({r for r in roots if r >= 0}) > 1:
            out.add(w)
    return frozenset(out)


def st_core(a: FlowGraph, budget: Budget | None = None) -> FlowGraph:
    """The sub-flow-graph formed by the edges that lie on some simple s-t path."""
    if a.source == a.target:
        return trivial()
    flags, _ = st_edge_flags(a, budget)
    kept = [e for e in range(a.q) if flags[e]]
    if not kept:
        raise CoreUndefined("no simple path joins source and target")
    return _subgraph(a, kept, a.source, a.target)


def _hangs_off(a: FlowGraph, x: int, other: int) -> bool:
    """Whether deleting x leaves a component that does not contain ``other``."""
    roots = _components_without(a, x)
    return any(r >= 0 and r != roots[other] for r in roots)


def is_s_standard(a: FlowGraph) -> bool:
    """No infinitesimal left summand can be split off."""
    if a.is_trivial:
        return True
    if a.is_infinitesimal or a.loops(a.source):
        return False
    return not _hangs_off(a, a.source, a.target)


def is_t_standard(a: FlowGraph) -> bool:
    """No infinitesimal right summand can be split off."""
    if a.is_trivial:
        return True
    if a.is_infinitesimal or a.loops(a.target):
        return False
    return not _hangs_off(a, a.target, a.source)


def is_s_standard_by_search(a: FlowGraph, budget: Budget | None = None) -> bool:
    return not any(sp.left.q and sp.left.is_infinitesimal for sp in sum_splits(a, budget))


def is_t_standard_by_search(a: FlowGraph, budget: Budget | None = None) -> bool:
    return not any(sp.right.q and sp.right.is_infinitesimal for sp in sum_splits(a, budget))


def decompositions_match(xs: Sequence[FlowGraph], ys: Sequence[FlowGraph]) -> bool:
    return len(xs) == len(ys) and all(isomorphic(x, y) for x, y in zip(xs, ys))


def recomposes(a: FlowGraph) -> bool:
    return isomorphic(canonical_decomposition(a).recompose(), a)


def is_st(a: FlowGraph) -> bool:
    return is_st_flow_graph(a)[0]


__all__ = [
    "DecompositionSeq",
    "Mode",
    "Partition",
    "RankPair",
    "SplitVertexSet",
    "SumSplit",
    "canonical_decomposition",
    "cut_vertices",
    "decompositions_match",
    "is_oplus_irreducible",
    "is_s_standard",
    "is_s_standard_by_search",
    "is_splitting_vertex",
    "is_t_standard",
    "is_t_standard_by_search",
    "nested_decomposition",
    "rank",
    "recomposes",
    "split_at",
    "splitting_edges",
    "splitting_vertices",
    "st_core",
    "sum_splits",
]
