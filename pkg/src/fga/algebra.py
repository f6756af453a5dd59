"""Arithmetic on flow graphs: sum, product, scalars, the chains F_n, division, primes.

Sums and products are built on labeled graphs with a fixed relabeling so that
results are reproducible byte-for-byte:

* ``A + B``: A's vertices keep their labels, B's non-source vertices follow in
  order; A's edges come first, then B's.
* ``A * B``: edges are replaced in edge-id order; product edge ``i*q_B + j``
  is the copy of B-edge ``j`` substituted for A-edge ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence

from .config import Budget, default_budget
from .core import FlowGraph, VertexMap, _find, canonical_key, isomorphic, trivial
from .errors import DomainError, SearchBudgetExceeded

# largest quotient edge count found by enumerating candidates
MAX_QUOTIENT_EDGES = 5


def _graph(n: int, edges: tuple, s: int, t: int) -> FlowGraph:
    """Build a FlowGraph the operations already guarantee to be valid."""
    g = object.__new__(FlowGraph)
    object.__setattr__(g, "vertex_count", n)
    object.__setattr__(g, "edges", edges)
    object.__setattr__(g, "source", s)
    object.__setattr__(g, "target", t)
    return g


@dataclass(frozen=True, eq=False)
class SumResult:
    sum: FlowGraph
    left_map: VertexMap
    right_map: VertexMap

    @property
    def glue(self) -> int:
        return self.left_map.vertex[self.left_map.domain.target]


@dataclass(frozen=True, eq=False)
class ProductResult:
    product: FlowGraph
    edge_bijection: dict[int, tuple[int, int]]


def nat(n: int) -> FlowGraph:
    """The chain F_n: n edges 0->1->...->n."""
    if n < 0:
        raise DomainError("natural numbers are nonnegative")
    return _graph(n + 1, tuple((i, i + 1) for i in range(n)), 0, n)


def _right_labels(a: FlowGraph, b: FlowGraph) -> list[int]:
    lab = [0] * b.vertex_count
    nxt = a.vertex_count
    for v in range(b.vertex_count):
        if v == b.source:
            lab[v] = a.target
        else:
            lab[v] = nxt
            nxt += 1
    return lab


def plus(a: FlowGraph, b: FlowGraph) -> FlowGraph:
    lab = _right_labels(a, b)
    edges = a.edges + tuple((lab[u], lab[v]) for u, v in b.edges)
    return _graph(a.vertex_count + b.vertex_count - 1, edges, a.source, lab[b.target])


def oplus(a: FlowGraph, b: FlowGraph) -> SumResult:
    """Glue a's target to b's source; also return the two plus-injections."""
    total = plus(a, b)
    lab = _right_labels(a, b)
    left = VertexMap(a, total, {v: v for v in range(a.vertex_count)}, {e: e for e in range(a.q)})
    right = VertexMap(
        b, total, {v: lab[v] for v in range(b.vertex_count)}, {e: a.q + e for e in range(b.q)}
    )
    return SumResult(total, left, right)


def sum_all(parts: Iterable[FlowGraph]) -> FlowGraph:
    """Left fold of ``plus``; the empty sum is F0."""
    return reduce(plus, parts, trivial())


def _copy_labels(a: FlowGraph, b: FlowGraph) -> tuple[int, list[list[int]], int, int]:
    """Vertex count, per-A-edge label maps for B's vertices, and the new source/target."""
    pb, sb, tb = b.vertex_count, b.source, b.target
    if a.q == 0:
        return a.vertex_count, [], a.source, a.target
    maps = []
    if sb != tb:
        inner = [v for v in range(pb) if v != sb and v != tb]
        nxt = a.vertex_count
        for u, v in a.edges:
            m = [0] * pb
            m[sb], m[tb] = u, v
            for x in inner:
                m[x] = nxt
                nxt += 1
            maps.append(m)
        return nxt, maps, a.source, a.target
    # B trivial or infinitesimal: every edge of A is contracted, A collapses to vertex 0
    inner = [v for v in range(pb) if v != sb]
    nxt = 1
    for _ in a.edges:
        m = [0] * pb
        for x in inner:
            m[x] = nxt
            nxt += 1
        maps.append(m)
    return nxt, maps, 0, 0


def times(a: FlowGraph, b: FlowGraph) -> FlowGraph:
    pb, sb, tb = b.vertex_count, b.source, b.target
    if a.q == 0 or b.q == 0 and sb == tb and pb == 1:
        n, maps, s, t = _copy_labels(a, b)
        return _graph(n, tuple((m[u], m[v]) for m in maps for u, v in b.edges), s, t)
    if sb != tb:
        inner = [v for v in range(pb) if v != sb and v != tb]
        step, nxt = len(inner), a.vertex_count
        edges: list = []
        m = [0] * pb
        for u, v in a.edges:
            m[sb], m[tb] = u, v
            for k, x in enumerate(inner, nxt):
                m[x] = k
            nxt += step
            edges += [(m[x], m[y]) for x, y in b.edges]
        return _graph(nxt, tuple(edges), a.source, a.target)
    step = pb - 1
    m = [0] * pb
    edges = []
    nxt = 1
    for _ in a.edges:
        for k, x in enumerate((v for v in range(pb) if v != sb), nxt):
            m[x] = k
        nxt += step
        edges += [(m[x], m[y]) for x, y in b.edges]
    return _graph(nxt, tuple(edges), 0, 0)


def otimes(a: FlowGraph, b: FlowGraph) -> ProductResult:
    """Substitute a copy of b for every edge of a (edge-id order)."""
    prod = times(a, b)
    qb = b.q
    lam = {i * qb + j: (i, j) for i in range(a.q) for j in range(qb)}
    return ProductResult(prod, lam)


def otimes_staged(a: FlowGraph, b: FlowGraph, eta: Sequence[int] | None = None) -> ProductResult:
    """Product built stage by stage, replacing edges in the order ``eta``.

    Vertices are tracked as tokens under a union-find (gluing s_B to t_B merges
    the endpoints of the replaced edge); surviving classes are numbered by
    first token.  With ``eta`` the identity this reproduces :func:`times`
    exactly.
    """
    order = list(range(a.q)) if eta is None else list(eta)
    if sorted(order) != list(range(a.q)):
        raise ValueError("eta must enumerate every edge of the left factor exactly once")
    parent = list(range(a.vertex_count))

    def token() -> int:
        parent.append(len(parent))
        return len(parent) - 1

    new_edges: list[tuple[int, int]] = []
    lam: dict[int, tuple[int, int]] = {}
    for e in order:
        u, v = a.edges[e]
        u, v = _find(parent, u), _find(parent, v)
        if b.source == b.target:
            if u != v:
                parent[v] = u
            v = u
        copy = {}
        for x in range(b.vertex_count):
            if x == b.source:
                copy[x] = u
            elif x == b.target:
                copy[x] = v
            else:
                copy[x] = token()
        for j, (x, y) in enumerate(b.edges):
            lam[len(new_edges)] = (e, j)
            new_edges.append((copy[x], copy[y]))
    label: dict[int, int] = {}
    for tok in range(len(parent)):
        root = _find(parent, tok)
        if root not in label:
            label[root] = len(label)

    def lab(x: int) -> int:
        return label[_find(parent, x)]

    edges = tuple((lab(x), lab(y)) for x, y in new_edges)
    prod = FlowGraph(len(label), edges, lab(a.source), lab(a.target))
    return ProductResult(prod, lam)


def product_all(parts: Sequence[FlowGraph]) -> FlowGraph:
    if not parts:
        raise DomainError("empty product")
    return reduce(times, parts)


def scalar_multiple(k: int, a: FlowGraph) -> FlowGraph:
    """kA = (k-1)A + A."""
    if k < 1:
        raise DomainError("scalar multiples are defined for positive k only")
    out = a
    for _ in range(k - 1):
        out = plus(out, a)
    return out


def scalar_power(a: FlowGraph, k: int) -> FlowGraph:
    """A^k = A^(k-1) * A."""
    if k < 1:
        raise DomainError("scalar powers are defined for positive k only")
    out = a
    for _ in range(k - 1):
        out = times(out, a)
    return out


# --------------------------------------------------------------------------
# small closed forms used by division


def reverse(a: FlowGraph) -> FlowGraph:
    """All edges flipped, same source and target; equals ``a * rev(F1)``."""
    return _graph(a.vertex_count, tuple((v, u) for u, v in a.edges), a.source, a.target)


def swap(a: FlowGraph) -> FlowGraph:
    """Source and target exchanged; equals ``rev(F1) * a``."""
    return _graph(a.vertex_count, a.edges, a.target, a.source)


def reversed_unit() -> FlowGraph:
    return _graph(2, ((1, 0),), 0, 1)


def loop() -> FlowGraph:
    """C1: one vertex carrying one loop."""
    return _graph(1, ((0, 0),), 0, 0)


def is_unit(a: FlowGraph) -> bool:
    """The invertible elements under the product are F1 and rev(F1)."""
    return a.vertex_count == 2 and a.q == 1 and a.source != a.target


def one_edge_graphs() -> list[FlowGraph]:
    return [
        nat(1),
        reversed_unit(),
        loop(),
        _graph(2, ((0, 1),), 0, 0),
        _graph(2, ((0, 1),), 1, 1),
    ]


def _graphs_with_edges(q: int) -> list[FlowGraph]:
    from .explorer.enumerate import UniverseSpec, universe

    if q > MAX_QUOTIENT_EDGES:
        raise SearchBudgetExceeded(
            f"quotient candidates with {q} edges exceed the enumeration bound of {MAX_QUOTIENT_EDGES}"
        )
    return universe(UniverseSpec(max_edges=q, min_edges=q))


def _vertex_splits(a: FlowGraph, limit: int = 1 << 16) -> Iterator[FlowGraph]:
    """Graphs B with B's source and target distinct such that identifying them yields ``a``.

    ``a`` must be infinitesimal; its shared vertex is split into a source and a
    new target vertex, each edge end at that vertex choosing a side.
    """
    w = a.source
    ends = [(i, k) for i, e in enumerate(a.edges) for k in (0, 1) if e[k] == w]
    if len(ends) > 20 or (1 << len(ends)) > limit:
        raise SearchBudgetExceeded("too many edge ends at the shared vertex to split")
    n = a.vertex_count
    for mask in range(1 << len(ends)):
        edges = [list(e) for e in a.edges]
        for bit, (i, k) in enumerate(ends):
            if mask >> bit & 1:
                edges[i][k] = n
        try:
            yield FlowGraph(n + 1, tuple(map(tuple, edges)), w, n)
        except Exception:
            continue


def _left_unit_quotients(a: FlowGraph, c: FlowGraph) -> list[FlowGraph]:
    """Candidates B with c * B == a for a one-edge c (each still to be verified)."""
    if c.source != c.target:
        return [a] if c.edges[0] == (c.source, c.target) else [swap(a)]
    if not a.is_infinitesimal:
        return []
    if c.vertex_count == 1:  # the loop: identifies B's source and target
        return [a, *_vertex_splits(a)]
    w = a.source
    if c.edges[0][0] == c.source:  # c * B = (G_B, s_B, s_B)
        return [FlowGraph(a.vertex_count, a.edges, w, x) for x in range(a.vertex_count)]
    return [FlowGraph(a.vertex_count, a.edges, x, w) for x in range(a.vertex_count)]


def _right_unit_quotients(a: FlowGraph, b: FlowGraph) -> list[FlowGraph]:
    """Candidates C with C * b == a for a one-edge b."""
    if b.source != b.target:
        return [a] if b.edges[0] == (b.source, b.target) else [reverse(a)]
    # C * b contracts C to one vertex carrying q_C copies of b, whatever C is
    if not _collapse_matches(a, b):
        return []
    return _graphs_with_edges(a.q)


def _collapse_matches(a: FlowGraph, b: FlowGraph) -> bool:
    """Whether C * b is isomorphic to a for one (hence every) C with q_a / q_b edges."""
    if b.source != b.target or b.q == 0 or a.q % b.q or not a.is_infinitesimal:
        return False
    q_c = a.q // b.q
    return a.vertex_count == 1 + q_c * (b.vertex_count - 1) and isomorphic(times(nat(q_c), b), a)


# --------------------------------------------------------------------------
# division


def _quotient_filter(a: FlowGraph, q_c: int, p_b: int, b_collapses: bool, left_side: bool):
    """Cheap necessary conditions on a candidate quotient C."""

    def ok(c: FlowGraph) -> bool:
        if c.q != q_c:
            return False
        if left_side:
            return True
        if b_collapses:
            return a.vertex_count == 1 + q_c * (p_b - 1)
        return a.vertex_count == c.vertex_count + q_c * (p_b - 2)

    return ok


def right_quotients(a: FlowGraph, b: FlowGraph, budget: Budget | None = None) -> list[FlowGraph]:
    """Every C (one per isomorphism class, ascending key) with C * b isomorphic to a."""
    budget = budget or default_budget()
    if a.is_trivial and b.is_trivial:
        raise DomainError("0/0 is undefined")
    if b.q == 0:
        return []
    if a.q == 0:
        return [trivial()]
    if a.q % b.q:
        return []
    q_c = a.q // b.q
    if b.q == 1:
        candidates = _right_unit_quotients(a, b)
    else:
        if b.source != b.target and a.is_infinitesimal:
            # a non-infinitesimal B only yields infinitesimal products from infinitesimal C
            pass
        candidates = _graphs_with_edges(q_c)
    keep = _quotient_filter(a, q_c, b.vertex_count, b.source == b.target, left_side=False)
    found: dict[bytes, FlowGraph] = {}
    for c in candidates:
        if keep(c) and isomorphic(times(c, b), a, budget):
            found.setdefault(canonical_key(c, budget), c)
    return [found[k] for k in sorted(found)]


def left_quotients(a: FlowGraph, b: FlowGraph, budget: Budget | None = None) -> list[FlowGraph]:
    """Every C (one per isomorphism class, ascending key) with b * C isomorphic to a."""
    budget = budget or default_budget()
    if a.is_trivial and b.is_trivial:
        raise DomainError("0\\0 is undefined")
    if b.q == 0:
        return []
    if a.q == 0:
        return [trivial()]
    if a.q % b.q:
        return []
    q_c = a.q // b.q
    if b.q == 1:
        candidates = _left_unit_quotients(a, b)
    else:
        candidates = _graphs_with_edges(q_c)
    found: dict[bytes, FlowGraph] = {}
    for c in candidates:
        if c.q != q_c:
            continue
        if c.source != c.target and c.vertex_count > 1:
            if a.vertex_count != b.vertex_count + b.q * (c.vertex_count - 2):
                continue
        elif a.vertex_count != 1 + b.q * (c.vertex_count - 1):
            continue
        if isomorphic(times(b, c), a, budget):
            found.setdefault(canonical_key(c, budget), c)
    return [found[k] for k in sorted(found)]


def right_divide(a: FlowGraph, b: FlowGraph, budget: Budget | None = None) -> FlowGraph | None:
    """Some C with a = C * b (smallest canonical key), or None."""
    qs = right_quotients(a, b, budget)
    return qs[0] if qs else None


def left_divide(a: FlowGraph, b: FlowGraph, budget: Budget | None = None) -> FlowGraph | None:
    """Some C with a = b * C (smallest canonical key), or None."""
    qs = left_quotients(a, b, budget)
    return qs[0] if qs else None


# --------------------------------------------------------------------------
# primes


def _divisor_candidates(a: FlowGraph, d: int, complement_side: str) -> list[FlowGraph]:
    """Graphs with ``d`` edges that may divide ``a``.

    When the cofactor has a single edge the candidates come from the closed
    forms instead of enumeration.
    """
    if d == a.q and a.q > 1:
        out: list[FlowGraph] = []
        for u in one_edge_graphs():
            if complement_side == "left":
                out.extend(_left_unit_quotients(a, u))
            elif u.source != u.target:
                out.extend(_right_unit_quotients(a, u))
            elif _collapse_matches(a, u):
                # every graph with q_a edges is a left factor; one non-unit representative suffices
                out.append(nat(a.q))
        return out
    if d == 1:
        return one_edge_graphs()
    return _graphs_with_edges(d)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def is_right_prime(a: FlowGraph, budget: Budget | None = None, units: bool = True) -> bool:
    """Prime via right division: every factorization a = C * B has a unit factor.

    With ``units=False`` the literal criterion is used instead: a/B may exist
    only for B isomorphic to F1 or to a.
    """
    if a.q == 0 or (units and is_unit(a)) or (not units and isomorphic(a, nat(1))):
        return False
    for d in _divisors(a.q):
        for b in _divisor_candidates(a, d, complement_side="left"):
            if b.q != d:
                continue
            if units:
                if is_unit(b):
                    continue
                if _collapse_matches(a, b):
                    # all graphs with q_a / q_b edges are quotients, and some are not units
                    return False
                if any(not is_unit(c) for c in right_quotients(a, b, budget)):
                    return False
            else:
                if isomorphic(b, nat(1)) or isomorphic(b, a):
                    continue
                if _collapse_matches(a, b) or right_quotients(a, b, budget):
                    return False
    return True


def is_left_prime(a: FlowGraph, budget: Budget | None = None, units: bool = True) -> bool:
    """Prime via left division: every factorization a = B * C has a unit factor."""
    if a.q == 0 or (units and is_unit(a)) or (not units and isomorphic(a, nat(1))):
        return False
    for d in _divisors(a.q):
        for b in _divisor_candidates(a, d, complement_side="right"):
            if b.q != d:
                continue
            if units:
                if is_unit(b):
                    continue
                if any(not is_unit(c) for c in left_quotients(a, b, budget)):
                    return False
            else:
                if isomorphic(b, nat(1)) or isomorphic(b, a):
                    continue
                if left_quotients(a, b, budget):
                    return False
    return True


def is_prime(a: FlowGraph, budget: Budget | None = None) -> bool:
    """Right-prime and left-prime agree; this reports the right-division verdict."""
    return is_right_prime(a, budget)
