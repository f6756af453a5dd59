"""Flow graphs: the value type, structural predicates, isomorphism and embeddings.

A flow graph is a finite, weakly connected, directed multigraph with a
distinguished source and target vertex.  Vertices are dense integers
``0..vertex_count-1`` and an edge's id is its position in ``edges``.

Equality (``==``) on :class:`FlowGraph` is *labeled* identity.  Whenever the
algebra talks about two flow graphs being equal it means isomorphic; use
:func:`are_isomorphic` or compare :func:`canonical_key` values.
"""

from __future__ import annotations

import enum
import struct
from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .config import Budget, Counter, default_budget
from .errors import SearchBudgetExceeded, ValidationError

Edge = tuple[int, int]


class Kind(enum.Enum):
    TRIVIAL = "trivial"
    INFINITESIMAL = "infinitesimal"
    GENERAL = "general"


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _is_connected(n: int, edges: Iterable[Edge]) -> bool:
    parent = list(range(n))
    groups = n
    for u, v in edges:
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[ru] = rv
            groups -= 1
    return groups == 1


@dataclass(frozen=True)
class FlowGraph:
    vertex_count: int
    edges: tuple[Edge, ...]
    source: int
    target: int

    def __post_init__(self):
        n = self.vertex_count
        if n < 1:
            raise ValidationError("a flow graph needs at least one vertex")
        if not (0 <= self.source < n and 0 <= self.target < n):
            raise ValidationError(
                f"source/target ({self.source}, {self.target}) out of range for {n} vertices"
            )
        for i, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge {i} = ({u}, {v}) out of range for {n} vertices")
        if not _is_connected(n, self.edges):
            raise ValidationError("underlying undirected graph is not connected")

    @property
    def p(self) -> int:
        return self.vertex_count

    @property
    def q(self) -> int:
        return len(self.edges)

    @property
    def is_trivial(self) -> bool:
        return self.vertex_count == 1 and not self.edges

    @property
    def is_infinitesimal(self) -> bool:
        return self.source == self.target and not self.is_trivial

    @cached_property
    def out_mult(self) -> tuple[dict[int, int], ...]:
        out = [defaultdict(int) for _ in range(self.vertex_count)]
        for u, v in self.edges:
            out[u][v] += 1
        return tuple(dict(d) for d in out)

    @cached_property
    def in_mult(self) -> tuple[dict[int, int], ...]:
        inn = [defaultdict(int) for _ in range(self.vertex_count)]
        for u, v in self.edges:
            inn[v][u] += 1
        return tuple(dict(d) for d in inn)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nb = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            if u != v:
                nb[u].add(v)
                nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def pair_edges(self) -> dict[Edge, tuple[int, ...]]:
        """Edge ids grouped by (tail, head), ascending."""
        d: dict[Edge, list[int]] = defaultdict(list)
        for i, e in enumerate(self.edges):
            d[e].append(i)
        return {k: tuple(v) for k, v in d.items()}

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            if v != u:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    def loops(self, v: int) -> int:
        return self.out_mult[v].get(v, 0)

    def out_degree(self, v: int) -> int:
        """Number of non-loop edges leaving ``v``."""
        return sum(c for w, c in self.out_mult[v].items() if w != v)

    def in_degree(self, v: int) -> int:
        return sum(c for w, c in self.in_mult[v].items() if w != v)

    def __repr__(self) -> str:
        return (
            f"FlowGraph(p={self.vertex_count}, edges={list(self.edges)}, "
            f"s={self.source}, t={self.target})"
        )


def new_flow_graph(
    vertex_count: int, edges: Iterable[Sequence[int]], source: int, target: int
) -> FlowGraph:
    return FlowGraph(int(vertex_count), tuple((int(u), int(v)) for u, v in edges), int(source), int(target))


def trivial() -> FlowGraph:
    return FlowGraph(1, (), 0, 0)


def relabel(a: FlowGraph, perm: Sequence[int], edge_order: Sequence[int] | None = None) -> FlowGraph:
    """Rename vertex ``v`` to ``perm[v]``; optionally reorder edges (new id i = old id edge_order[i])."""
    edges = a.edges if edge_order is None else tuple(a.edges[i] for i in edge_order)
    return FlowGraph(
        a.vertex_count,
        tuple((perm[u], perm[v]) for u, v in edges),
        perm[a.source],
        perm[a.target],
    )


def classify(a: FlowGraph) -> Kind:
    if a.is_trivial:
        return Kind.TRIVIAL
    if a.source == a.target:
        return Kind.INFINITESIMAL
    return Kind.GENERAL


# --------------------------------------------------------------------------
# undirected form and the st property


@dataclass(frozen=True)
class UndirectedForm:
    """Orientation-free view; ``edges[i] = (u, v, tag)`` with ``u <= v``, tag the directed edge id."""

    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]
    origin: FlowGraph = field(repr=False, compare=False)

    def directed(self, tag: int) -> Edge:
        return self.origin.edges[tag]


def undirected_form(a: FlowGraph) -> UndirectedForm:
    return UndirectedForm(
        a.vertex_count,
        tuple((min(u, v), max(u, v), i) for i, (u, v) in enumerate(a.edges)),
        a,
    )


def st_edge_flags(
    a: FlowGraph, budget: Budget | None = None
) -> tuple[tuple[bool, ...], dict[int, tuple[int, ...]]]:
    """Per-edge st flags plus, for each flagged edge, a witnessing simple s-t path.

    A path is returned as the sequence of edge ids it traverses in U(G).
    """
    budget = budget or default_budget()
    q = a.q
    flags = [False] * q
    witness: dict[int, tuple[int, ...]] = {}
    s, t = a.source, a.target
    if s == t or q == 0:
        return tuple(flags), witness
    counter = Counter(budget.nodes, "st-property path search")
    remaining = q - sum(1 for u, v in a.edges if u == v)  # loops never lie on a simple path
    on_path = [False] * a.vertex_count
    on_path[s] = True
    path: list[int] = []
    inc = a.incident
    edges = a.edges

    def dfs(x: int) -> bool:
        nonlocal remaining
        for eid in inc[x]:
            u, v = edges[eid]
            y = v if u == x else u
            if y == x or on_path[y]:
                continue
            counter.tick()
            path.append(eid)
            if y == t:
                for e in path:
                    if not flags[e]:
                        flags[e] = True
                        witness[e] = tuple(path)
                        remaining -= 1
                if remaining == 0:
                    return True
            else:
                on_path[y] = True
                if dfs(y):
                    return True
                on_path[y] = False
            path.pop()
        return False

    dfs(s)
    return tuple(flags), witness


def is_st_flow_graph(a: FlowGraph, budget: Budget | None = None) -> tuple[bool, tuple[bool, ...]]:
    flags, _ = st_edge_flags(a, budget)
    return all(flags), flags


def check_simple_st_path(a: FlowGraph, path: Sequence[int]) -> bool:
    """Independent re-check that ``path`` (edge ids) is a simple s-t walk in U(G)."""
    x = a.source
    seen = {x}
    for eid in path:
        u, v = a.edges[eid]
        if x == u:
            y = v
        elif x == v:
            y = u
        else:
            return False
        if y in seen:
            return False
        seen.add(y)
        x = y
    return x == a.target and len(set(path)) == len(path)


# --------------------------------------------------------------------------
# maps


@dataclass(frozen=True, eq=False)
class VertexMap:
    """Injective structure-preserving map from (part of) ``domain`` into ``codomain``.

    ``vertex`` and ``edge`` cover exactly the mapped part of the domain,
    which is the whole graph for isomorphisms and full embeddings.
    """

    domain: FlowGraph
    codomain: FlowGraph
    vertex: Mapping[int, int]
    edge: Mapping[int, int]

    def inverse(self) -> VertexMap:
        return VertexMap(
            self.codomain,
            self.domain,
            {b: a for a, b in self.vertex.items()},
            {b: a for a, b in self.edge.items()},
        )

    def compose(self, other: VertexMap) -> VertexMap:
        """``other`` after ``self``."""
        return VertexMap(
            self.domain,
            other.codomain,
            {a: other.vertex[b] for a, b in self.vertex.items()},
            {a: other.edge[b] for a, b in self.edge.items()},
        )

    def as_text(self) -> str:
        vs = " ".join(f"{a}->{b}" for a, b in sorted(self.vertex.items()))
        es = " ".join(f"{a}->{b}" for a, b in sorted(self.edge.items()))
        return f"vertices: {vs}\nedges: {es}"


def verify_embedding(m: VertexMap, anchors: Mapping[int, int] | None = None) -> bool:
    """Check injectivity, endpoint preservation and anchors without trusting the search."""
    a, b = m.domain, m.codomain
    if len(set(m.vertex.values())) != len(m.vertex):
        return False
    if len(set(m.edge.values())) != len(m.edge):
        return False
    for x, y in m.vertex.items():
        if not (0 <= x < a.vertex_count and 0 <= y < b.vertex_count):
            return False
    for e, f in m.edge.items():
        u, v = a.edges[e]
        if u not in m.vertex or v not in m.vertex:
            return False
        if b.edges[f] != (m.vertex[u], m.vertex[v]):
            return False
    for x, y in (anchors or {}).items():
        if m.vertex.get(x) != y:
            return False
    return True


def verify_isomorphism(m: VertexMap) -> bool:
    a, b = m.domain, m.codomain
    return (
        a.vertex_count == b.vertex_count
        and a.q == b.q
        and len(m.vertex) == a.vertex_count
        and len(m.edge) == a.q
        and verify_embedding(m, {a.source: b.source, a.target: b.target})
    )


# --------------------------------------------------------------------------
# colour refinement shared by canonical form and isomorphism


def _initial_colours(a: FlowGraph, pinned: bool = True) -> list[tuple]:
    s, t = (a.source, a.target) if pinned else (-1, -1)
    return [
        (v != s, v != t, a.loops(v), a.in_degree(v), a.out_degree(v))
        for v in range(a.vertex_count)
    ]


def _rank(keys: Sequence) -> list[int]:
    index = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [index[k] for k in keys]


def _refine(a: FlowGraph, colours: list[int]) -> list[int]:
    out_mult, in_mult = a.out_mult, a.in_mult
    n_cells = len(set(colours))
    n = a.vertex_count
    while n_cells < n:
        sigs = [
            (
                colours[v],
                tuple(sorted((colours[w], c) for w, c in out_mult[v].items() if w != v)),
                tuple(sorted((colours[w], c) for w, c in in_mult[v].items() if w != v)),
            )
            for v in range(n)
        ]
        new = _rank(sigs)
        cells = len(set(new))
        colours = new
        if cells == n_cells:
            break
        n_cells = cells
    return colours


def refined_colours(a: FlowGraph, pinned: bool = True) -> list[int]:
    """Isomorphism-invariant equitable colouring; source and target get their own cells when pinned."""
    return _refine(a, _rank(_initial_colours(a, pinned)))


def _twins(a: FlowGraph, u: int, v: int, pinned: bool = True) -> bool:
    """True when swapping u and v is an automorphism of ``a``."""
    if pinned and ({u, v} & {a.source, a.target}):
        return False
    om, im = a.out_mult, a.in_mult
    if om[u].get(u, 0) != om[v].get(v, 0):
        return False
    if om[u].get(v, 0) != om[v].get(u, 0):
        return False
    ou = {w: c for w, c in om[u].items() if w not in (u, v)}
    ov = {w: c for w, c in om[v].items() if w not in (u, v)}
    if ou != ov:
        return False
    iu = {w: c for w, c in im[u].items() if w not in (u, v)}
    iv = {w: c for w, c in im[v].items() if w not in (u, v)}
    return iu == iv


def _certificate(a: FlowGraph, colours: Sequence[int], pinned: bool = True) -> tuple:
    lab = colours  # discrete colouring: colour is the new label
    edges = sorted((lab[u], lab[v]) for u, v in a.edges)
    flat = [a.vertex_count, a.q, lab[a.source], lab[a.target]] if pinned else [a.vertex_count, a.q, 0, 0]
    for u, v in edges:
        flat.append(u)
        flat.append(v)
    return tuple(flat)


def _canonical_labeling(a: FlowGraph, budget: Budget, pinned: bool = True) -> tuple[tuple, list[int]]:
    counter = Counter(budget.nodes, "canonical form")
    best: list = [None, None]

    def search(colours: list[int]) -> None:
        counter.tick()
        cells: dict[int, list[int]] = defaultdict(list)
        for v, c in enumerate(colours):
            cells[c].append(v)
        if len(cells) == a.vertex_count:
            cert = _certificate(a, colours, pinned)
            if best[0] is None or cert < best[0]:
                best[0] = cert
                best[1] = list(colours)
            return
        target = min((len(m), c) for c, m in cells.items() if len(m) > 1)[1]
        reps: list[int] = []
        for v in cells[target]:
            if any(_twins(a, r, v, pinned) for r in reps):
                continue
            reps.append(v)
        for v in reps:
            split = [(c, 0 if w == v else 1) for w, c in enumerate(colours)]
            search(_refine(a, _rank(split)))

    search(refined_colours(a, pinned))
    return best[0], best[1]


def _encode(cert: tuple) -> bytes:
    return struct.pack(f">{len(cert)}H", *cert)


def canonical_key(a: FlowGraph, budget: Budget | None = None) -> bytes:
    """Exact isomorphism fingerprint: equal keys iff the flow graphs are isomorphic.

    Keys sort by (vertex count, edge count, ...), so ascending key order
    lists smaller graphs first.
    """
    cert, _ = _canonical_labeling(a, budget or default_budget())
    return _encode(cert)


def canonical_form(a: FlowGraph, budget: Budget | None = None) -> FlowGraph:
    """The representative of ``a``'s isomorphism class with canonical labels and sorted edges."""
    cert, lab = _canonical_labeling(a, budget or default_budget())
    n, q, s, t = cert[:4]
    edges = tuple((cert[4 + 2 * i], cert[5 + 2 * i]) for i in range(q))
    return FlowGraph(n, edges, s, t)


def key_from_bytes(key: bytes) -> FlowGraph:
    """Decode a canonical key back into its canonical representative."""
    cert = struct.unpack(f">{len(key) // 2}H", key)
    n, q, s, t = cert[:4]
    return FlowGraph(n, tuple((cert[4 + 2 * i], cert[5 + 2 * i]) for i in range(q)), s, t)


# --------------------------------------------------------------------------
# embedding search


class _Pattern:
    """Multiplicity view of a sub-multigraph of a flow graph (given by edge ids)."""

    def __init__(self, a: FlowGraph, edge_ids: Sequence[int], vertices: Iterable[int]):
        self.graph = a
        self.edge_ids = tuple(sorted(edge_ids))
        vs = set(vertices)
        for e in self.edge_ids:
            vs.update(a.edges[e])
        self.vertices = sorted(vs)
        out: dict[int, dict[int, int]] = {v: defaultdict(int) for v in self.vertices}
        inn: dict[int, dict[int, int]] = {v: defaultdict(int) for v in self.vertices}
        nb: dict[int, set[int]] = {v: set() for v in self.vertices}
        for e in self.edge_ids:
            u, v = a.edges[e]
            out[u][v] += 1
            inn[v][u] += 1
            if u != v:
                nb[u].add(v)
                nb[v].add(u)
        self.out = out
        self.inn = inn
        self.nb = nb

    def loops(self, v: int) -> int:
        return self.out[v].get(v, 0)

    def out_degree(self, v: int) -> int:
        return sum(c for w, c in self.out[v].items() if w != v)

    def in_degree(self, v: int) -> int:
        return sum(c for w, c in self.inn[v].items() if w != v)

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        start = self.vertices[0]
        seen = {start}
        todo = [start]
        while todo:
            x = todo.pop()
            for y in self.nb[x]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return len(seen) == len(self.vertices)


def _search_order(pat: _Pattern, anchors: Mapping[int, int]) -> list[int]:
    """Anchors first, then breadth-first so each vertex follows a placed neighbour."""
    order = sorted(anchors)
    seen = set(order)
    queue = deque(order)
    roots = iter(pat.vertices)
    while True:
        while queue:
            x = queue.popleft()
            for y in sorted(pat.nb[x]):
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    queue.append(y)
        root = next((r for r in roots if r not in seen), None)
        if root is None:
            return order
        seen.add(root)
        order.append(root)
        queue.append(root)


def _vertex_embeddings(
    pat: _Pattern,
    host: FlowGraph,
    anchors: Mapping[int, int],
    capacity: Mapping[Edge, int] | None,
    counter: Counter,
    exact: bool = False,
    pat_colours: Sequence[int] | None = None,
    host_colours: Sequence[int] | None = None,
) -> Iterator[dict[int, int]]:
    """Yield vertex maps pat -> host that extend to an edge-injective embedding.

    ``capacity`` overrides host multiplicities (used to reserve edges already
    claimed by another embedding).  ``exact`` additionally requires equal
    degrees, which together with equal vertex/edge totals makes the map an
    isomorphism.
    """
    hout = host.out_mult

    def cap(x: int, y: int) -> int:
        if capacity is None:
            return hout[x].get(y, 0)
        return capacity.get((x, y), 0)

    for x, y in anchors.items():
        if not (0 <= y < host.vertex_count):
            return
    # consistent anchors
    inv: dict[int, int] = {}
    for x, y in anchors.items():
        if y in inv and inv[y] != x:
            return
        inv[y] = x

    order = _search_order(pat, anchors)
    pos = {x: i for i, x in enumerate(order)}
    # for every vertex: the earlier-placed pattern neighbours it must agree with
    earlier = {x: [y for y in pat.nb[x] if pos[y] < pos[x]] for x in order}
    parent = {x: (min(earlier[x], key=pos.__getitem__) if earlier[x] else None) for x in order}
    p_loops = {x: pat.loops(x) for x in order}
    p_in = {x: pat.in_degree(x) for x in order}
    p_out = {x: pat.out_degree(x) for x in order}
    h_in = [host.in_degree(v) for v in range(host.vertex_count)]
    h_out = [host.out_degree(v) for v in range(host.vertex_count)]

    def fits(x: int, y: int, phi: dict[int, int]) -> bool:
        if exact:
            if host.loops(y) != p_loops[x] or h_in[y] != p_in[x] or h_out[y] != p_out[x]:
                return False
            if pat_colours is not None and pat_colours[x] != host_colours[y]:
                return False
        else:
            if h_in[y] < p_in[x] or h_out[y] < p_out[x]:
                return False
        if p_loops[x] > cap(y, y):
            return False
        po, pi = pat.out[x], pat.inn[x]
        for z in earlier[x]:
            w = phi[z]
            if po.get(z, 0) > cap(y, w) or pi.get(z, 0) > cap(w, y):
                return False
        return True

    phi: dict[int, int] = {}
    used: set[int] = set()
    n = len(order)

    def rec(i: int) -> Iterator[dict[int, int]]:
        if i == n:
            yield dict(phi)
            return
        x = order[i]
        if x in anchors:
            cands: Iterable[int] = (anchors[x],)
        elif parent[x] is not None:
            cands = sorted(host.neighbors[phi[parent[x]]])
        else:
            cands = range(host.vertex_count)
        for y in cands:
            counter.tick()
            if y in used or not fits(x, y, phi):
                continue
            phi[x] = y
            used.add(y)
            yield from rec(i + 1)
            del phi[x]
            used.discard(y)

    yield from rec(0)


def _assign_edges(
    pat: _Pattern, host: FlowGraph, phi: Mapping[int, int], exclude: frozenset[int] = frozenset()
) -> dict[int, int]:
    """Map pattern edges to the lowest-id free parallel host edges."""
    taken: dict[Edge, int] = defaultdict(int)
    out: dict[int, int] = {}
    pe = host.pair_edges
    for e in pat.edge_ids:
        u, v = pat.graph.edges[e]
        key = (phi[u], phi[v])
        ids = [f for f in pe.get(key, ()) if f not in exclude]
        out[e] = ids[taken[key]]
        taken[key] += 1
    return out


def embed_subgraph(
    a: FlowGraph,
    edge_ids: Sequence[int],
    vertices: Iterable[int],
    host: FlowGraph,
    anchors: Mapping[int, int],
    budget: Budget | None = None,
    exclude: frozenset[int] = frozenset(),
    counter: Counter | None = None,
) -> Iterator[VertexMap]:
    """All embeddings of the sub-multigraph (edge_ids, vertices) of ``a`` into ``host``.

    Host edges in ``exclude`` are unavailable.  Embeddings are listed once per
    vertex map; parallel edges are assigned lowest-id first.
    """
    pat = _Pattern(a, edge_ids, vertices)
    counter = counter or Counter((budget or default_budget()).nodes, "embedding search")
    capacity = None
    if exclude:
        capacity = defaultdict(int)
        for i, e in enumerate(host.edges):
            if i not in exclude:
                capacity[e] += 1
    for phi in _vertex_embeddings(pat, host, anchors, capacity, counter):
        yield VertexMap(a, host, phi, _assign_edges(pat, host, phi, exclude))


def find_anchored_embeddings(
    a: FlowGraph,
    b: FlowGraph,
    anchors: Iterable[str] = ("source",),
    budget: Budget | None = None,
) -> Iterator[VertexMap]:
    """Embeddings of G_A into G_B honouring ``anchors`` (subset of {"source", "target"}).

    Parallel edges are interchangeable, so each distinct vertex map is
    reported once with a fixed edge assignment.
    """
    anchor_set = set(anchors)
    unknown = anchor_set - {"source", "target"}
    if unknown:
        raise ValueError(f"unknown anchors: {sorted(unknown)}")
    pins: dict[int, int] = {}
    if "source" in anchor_set:
        pins[a.source] = b.source
    if "target" in anchor_set:
        if a.target in pins and pins[a.target] != b.target:
            return
        pins[a.target] = b.target
    yield from embed_subgraph(a, range(a.q), range(a.vertex_count), b, pins, budget)


def are_isomorphic(a: FlowGraph, b: FlowGraph, budget: Budget | None = None) -> VertexMap | None:
    """A flow-graph isomorphism a -> b (source to source, target to target), or None."""
    if a.vertex_count != b.vertex_count or a.q != b.q:
        return None
    if (a.source == a.target) != (b.source == b.target):
        return None
    if sorted(_initial_colours(a)) != sorted(_initial_colours(b)):
        return None
    ca, cb = refined_colours(a), refined_colours(b)
    if sorted(ca) != sorted(cb):
        return None
    budget = budget or default_budget()
    counter = Counter(budget.nodes, "isomorphism search")
    pat = _Pattern(a, range(a.q), range(a.vertex_count))
    anchors = {a.source: b.source, a.target: b.target}
    for phi in _vertex_embeddings(pat, b, anchors, None, counter, exact=True, pat_colours=ca, host_colours=cb):
        return VertexMap(a, b, phi, _assign_edges(pat, b, phi))
    return None


def isomorphic(a: FlowGraph, b: FlowGraph, budget: Budget | None = None) -> bool:
    return are_isomorphic(a, b, budget) is not None


def identity_map(a: FlowGraph) -> VertexMap:
    return VertexMap(a, a, {v: v for v in range(a.vertex_count)}, {e: e for e in range(a.q)})


__all__ = [
    "Budget",
    "FlowGraph",
    "Kind",
    "SearchBudgetExceeded",
    "UndirectedForm",
    "VertexMap",
    "are_isomorphic",
    "canonical_form",
    "canonical_key",
    "check_simple_st_path",
    "classify",
    "embed_subgraph",
    "find_anchored_embeddings",
    "identity_map",
    "is_st_flow_graph",
    "isomorphic",
    "key_from_bytes",
    "new_flow_graph",
    "refined_colours",
    "relabel",
    "st_edge_flags",
    "trivial",
    "undirected_form",
    "verify_embedding",
    "verify_isomorphism",
]
