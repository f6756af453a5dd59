"""The law catalog.

Each law is a predicate over a tuple of flow graphs that returns True when
the instance satisfies the statement.  Laws marked ``expect="fails"`` are
statements known to have counterexamples; the harness must find one.

Isomorphism checks are witness-first: sums and products are labeled so that
both sides of most identities line up edge-id for edge-id, and that candidate
map is verified directly before falling back to a full search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Iterator, Sequence

from .. import algebra as alg
from ..core import FlowGraph, canonical_key, find_anchored_embeddings, isomorphic, trivial
from ..decomposition import (
    Mode,
    canonical_decomposition,
    cut_vertices,
    is_oplus_irreducible,
    is_s_standard,
    is_t_standard,
    rank,
    splitting_edges,
    splitting_vertices,
    st_core,
)
from ..decomposition import is_st as _is_st
from ..order import strongly_below, weakly_below
from .enumerate import UniverseSpec, universe

Pool = Sequence[FlowGraph]


def same(x: FlowGraph, y: FlowGraph) -> bool:
    """Isomorphism test that first tries the edge-id-preserving candidate map."""
    if x.vertex_count != y.vertex_count or len(x.edges) != len(y.edges):
        return False
    m = {x.source: y.source}
    if m.setdefault(x.target, y.target) == y.target:
        ok = True
        for (u, v), (a, b) in zip(x.edges, y.edges):
            if m.setdefault(u, a) != a or m.setdefault(v, b) != b:
                ok = False
                break
        if ok and len(m) == x.vertex_count and len(set(m.values())) == len(m):
            return True
    return isomorphic(x, y)


class Context:
    """Per-run memo tables, keyed by object identity of pool members."""

    def __init__(self):
        self._memo: dict[tuple, object] = {}
        self._keep: list = []

    def memo(self, tag: str, fn: Callable, *args):
        key = (tag, *map(id, args))
        try:
            return self._memo[key]
        except KeyError:
            val = fn(*args)
            self._memo[key] = val
            self._keep.append(args)
            return val

    def plus(self, a, b):
        return self.memo("+", alg.plus, a, b)

    def times(self, a, b):
        return self.memo("*", alg.times, a, b)

    def weak(self, a, b):
        return self.memo("<=", weakly_below, a, b)

    def strong(self, a, b):
        return self.memo("<<", strongly_below, a, b)

    def st(self, a):
        return self.memo("st", _is_st, a)

    def decomposition(self, a):
        return self.memo("dec", canonical_decomposition, a)

    def chi(self, a):
        return self.memo("chi", lambda g: len(splitting_vertices(g)), a)

    def key(self, a):
        return self.memo("key", canonical_key, a)


@dataclass(frozen=True)
class Law:
    id: str
    arity: int
    statement: str
    holds: Callable[..., bool]
    expect: str = "holds"  # or "fails"
    universe: UniverseSpec | tuple[UniverseSpec, ...] = UniverseSpec(max_edges=4)
    filters: tuple[Callable[[FlowGraph], bool] | None, ...] = ()
    named: Callable[[], tuple[FlowGraph, ...]] | None = None
    pools: Callable[[UniverseSpec | None], list[list[FlowGraph]]] | None = None
    tuples: Callable[[list[list[FlowGraph]], Context], Iterator[tuple]] | None = None
    note: str = ""
    tags: tuple[str, ...] = field(default=())

    def specs(self, override: UniverseSpec | None = None) -> tuple[UniverseSpec, ...]:
        if override is not None:
            return (override,) * self.arity
        if isinstance(self.universe, UniverseSpec):
            return (self.universe,) * self.arity
        return self.universe

    def build_pools(self, override: UniverseSpec | None = None) -> list[list[FlowGraph]]:
        if self.pools is not None:
            return self.pools(override)
        out = []
        cache: dict[UniverseSpec, list[FlowGraph]] = {}
        for i, spec in enumerate(self.specs(override)):
            if spec not in cache:
                cache[spec] = universe(spec)
            f = self.filters[i] if i < len(self.filters) else None
            out.append([g for g in cache[spec] if f is None or f(g)])
        return out


def shell_order(pools: list[list[FlowGraph]]) -> Iterator[tuple[int, ...]]:
    """Index tuples ordered by their largest index, so small graphs are tried first."""
    sizes = [len(p) for p in pools]
    if not sizes or min(sizes) == 0:
        return
    k = len(pools)
    for m in range(max(sizes)):
        for p in range(k):
            if m >= sizes[p]:
                continue
            ranges = [range(min(m, sizes[j])) for j in range(p)]
            ranges.append((m,))
            ranges.extend(range(min(m + 1, sizes[j])) for j in range(p + 1, k))
            yield from product(*ranges)


# --------------------------------------------------------------------------
# reference graphs


def g(n: int, edges, s: int, t: int) -> FlowGraph:
    return FlowGraph(n, tuple(edges), s, t)


def cycle(n: int, t: int = 1) -> FlowGraph:
    return g(n, [(i, (i + 1) % n) for i in range(n)], 0, t)


F0, F1, F2 = trivial(), alg.nat(1), alg.nat(2)
C1 = alg.loop()
REV = alg.reversed_unit()


def _nontrivial(a: FlowGraph) -> bool:
    return a.q > 0


def _st(a: FlowGraph) -> bool:
    return _is_st(a)


# --------------------------------------------------------------------------
# predicates


def oplus_assoc(ctx, a, b, c):
    return same(alg.plus(ctx.plus(a, b), c), alg.plus(a, ctx.plus(b, c)))


def otimes_assoc(ctx, a, b, c):
    return same(alg.times(ctx.times(a, b), c), alg.times(a, ctx.times(b, c)))


def right_distrib(ctx, a, b, c):
    return same(alg.times(ctx.plus(a, b), c), alg.plus(ctx.times(a, c), ctx.times(b, c)))


def left_distrib(ctx, a, b, c):
    return same(alg.times(a, ctx.plus(b, c)), alg.plus(ctx.times(a, b), ctx.times(a, c)))


def oplus_comm(ctx, a, b):
    return same(alg.plus(a, b), alg.plus(b, a))


def otimes_comm(ctx, a, b):
    return same(alg.times(a, b), alg.times(b, a))


def oplus_identity(ctx, a, g_):
    if not (same(alg.plus(a, F0), a) and same(alg.plus(F0, a), a)):
        return False
    r1, r2 = same(alg.plus(a, g_), a), same(alg.plus(g_, a), a)
    return r1 == g_.is_trivial == r2


def _counts_plus(a, b, s):
    return s.vertex_count == a.vertex_count + b.vertex_count - 1 and s.q == a.q + b.q


def _counts_times(a, b, p):
    if b.source == b.target:
        n = 1 + a.q * (b.vertex_count - 1)
    else:
        n = a.vertex_count + a.q * (b.vertex_count - 2)
    return p.vertex_count == n and p.q == a.q * b.q


def oplus_counts(ctx, a, b):
    total = alg.plus(a, b)
    lab = alg._right_labels(a, b)
    return (
        _counts_plus(a, b, total)
        and total.source == a.source
        and total.target == lab[b.target]
        and lab[b.source] == a.target
        and total.edges[: a.q] == a.edges
        and all(total.edges[a.q + j] == (lab[u], lab[v]) for j, (u, v) in enumerate(b.edges))
    )


def otimes_counts(ctx, a, b):
    r = alg.otimes(a, b)
    lam = r.edge_bijection
    return _counts_times(a, b, r.product) and len(lam) == a.q * b.q == len(set(lam.values()))


def otimes_identity(ctx, a, g_):
    if a.is_trivial:
        return True
    fixes = same(alg.times(a, g_), a)
    if a.is_infinitesimal:
        # the only admitted exception: g = C1 with a made of loops at one vertex
        return not fixes or isomorphic(g_, F1) or (
            isomorphic(g_, C1) and isomorphic(a, alg.scalar_multiple(a.q, C1))
        )
    is_one = isomorphic(g_, F1)
    return fixes == is_one == same(alg.times(g_, a), a)


def otimes_identity_units(ctx, a, g_):
    """Corrected identity law: rev(F1) also fixes graphs symmetric under reversal or swap."""
    if a.is_trivial or a.is_infinitesimal:
        return True
    right = same(alg.times(a, g_), a)
    left = same(alg.times(g_, a), a)
    want_r = isomorphic(g_, F1) or (isomorphic(g_, REV) and isomorphic(alg.reverse(a), a))
    want_l = isomorphic(g_, F1) or (isomorphic(g_, REV) and isomorphic(alg.swap(a), a))
    return right == want_r and left == want_l


_PENDANT_OUT = FlowGraph(2, ((0, 1),), 0, 0)
_PENDANT_IN = FlowGraph(2, ((1, 0),), 0, 0)


def otimes_identity_infinitesimal(ctx, a, g_):
    """Every G fixing an infinitesimal A, on either side.

    On the right: F1, rev(F1) when A is its own reversal, and the three
    one-edge infinitesimals C1, the out-pendant and the in-pendant when A
    is a multiple of that graph. On the left: every one-edge G.
    """
    if not a.is_infinitesimal:
        return True
    want_r = isomorphic(g_, F1) or (isomorphic(g_, REV) and isomorphic(alg.reverse(a), a)) or any(
        isomorphic(g_, x) and isomorphic(a, alg.scalar_multiple(a.q, x)) for x in (C1, _PENDANT_OUT, _PENDANT_IN)
    )
    return same(alg.times(a, g_), a) == want_r and same(alg.times(g_, a), a) == (g_.q == 1)


def otimes_identity_exception(ctx, a, g_):
    """The naive identity law: a*g == a forces g == F1."""
    return not same(alg.times(a, g_), a) or isomorphic(g_, F1)


def otimes_zero(ctx, a, b):
    return alg.times(a, F0).is_trivial and (alg.times(a, b).is_trivial == (a.is_trivial or b.is_trivial))


def _etas(q: int) -> list[list[int]]:
    ident = list(range(q))
    rev = ident[::-1]
    rot = ident[1:] + ident[:1]
    return [rev, rot]


def eta_independence(ctx, a, b):
    base = alg.otimes_staged(a, b).product
    if base != alg.times(a, b):
        return False
    return all(same(alg.otimes_staged(a, b, eta).product, base) for eta in _etas(a.q))


def infinitesimal_product_law(ctx, a, b):
    if a.is_trivial or b.is_trivial:
        return True
    return alg.times(a, b).is_infinitesimal == (a.is_infinitesimal or b.is_infinitesimal)


def scalar_comm_reduction(ctx, a):
    left = a
    right = a
    for k in range(2, 5):
        left = alg.plus(left, a)  # (k-1)A + A
        right = alg.plus(a, right)  # A + (k-1)A
        if not same(left, right):
            return False
    return True


def right_div_distrib(ctx, k1, k2, b):
    a, c = ctx.times(k1, b), ctx.times(k2, b)
    q1 = ctx.memo("/", alg.right_divide, a, b)
    q2 = ctx.memo("/", alg.right_divide, c, b)
    if q1 is None or q2 is None:
        return False
    return same(alg.times(alg.plus(q1, q2), b), alg.plus(a, c))


def div_chain_rules(ctx, k1, k2, c):
    # right: A = K1*B, B = K2*C
    b = ctx.times(k2, c)
    a = alg.times(k1, b)
    ab = alg.right_divide(a, b)
    bc = ctx.memo("/", alg.right_divide, b, c)
    if ab is None or bc is None:
        return False
    if not same(alg.times(alg.times(ab, bc), c), a):
        return False
    # left: A = B*K1, B = C*K2
    b2 = ctx.times(c, k2)
    a2 = alg.times(b2, k1)
    a_b = alg.left_divide(a2, b2)
    b_c = ctx.memo("\\", alg.left_divide, b2, c)
    if a_b is None or b_c is None:
        return False
    return same(alg.times(c, alg.times(b_c, a_b)), a2)


def st_closure(ctx, a, b):
    return _is_st(ctx.plus(a, b))


def st_closure_reverse(ctx, a, b):
    if ctx.st(a) and ctx.st(b):
        return True
    return not _is_st(alg.plus(a, b))


def core_distributes(ctx, a, b):
    return same(st_core(alg.plus(a, b)), alg.plus(ctx.memo("core", st_core, a), ctx.memo("core", st_core, b)))


def _plus_images(a, b):
    """Vertices of a + b that lie in the image of the left injection, and the glue."""
    return set(range(a.vertex_count)), a.target


def crossing_summands(ctx, a, b, c):
    """Every source-anchored embedding of c that leaves the left summand pulls the glue back into chi(c)."""
    total = ctx.plus(a, b)
    left, glue = _plus_images(a, b)
    chi = None
    for m in find_anchored_embeddings(c, total, ("source",)):
        image = set(m.vertex.values())
        if image <= left:
            continue
        inv = {y: x for x, y in m.vertex.items()}
        if glue not in inv:
            return False
        if chi is None:
            chi = set(splitting_vertices(c))
        if inv[glue] not in chi:
            return False
    return True


def componentwise_iso(ctx, a, b):
    da, db = ctx.decomposition(a), ctx.decomposition(b)
    by_parts = len(da) == len(db) and all(ctx.key(x) == ctx.key(y) for x, y in zip(da, db))
    return by_parts == (ctx.key(a) == ctx.key(b))


def decomp_recompose(ctx, a):
    d = canonical_decomposition(a)
    return (
        len(d) == len(splitting_vertices(a)) + 1
        and all(not splitting_vertices(c).members for c in d)
        and same(d.recompose(), a)
    )


def _concat_matches(ctx, whole, parts) -> bool:
    dw = canonical_decomposition(whole)
    return len(dw) == len(parts) and all(isomorphic(x, y) for x, y in zip(dw, parts))


def decomp_for_sums(ctx, a, b):
    return _concat_matches(ctx, alg.plus(a, b), (*ctx.decomposition(a), *ctx.decomposition(b)))


def rank_total(ctx, a):
    chi = splitting_vertices(a)
    return all(r.r_s + r.r_t + 1 == len(chi) for r in (rank(a, w) for w in chi))


def rank_unique(ctx, a):
    chi = splitting_vertices(a)
    ranks = {w: rank(a, w) for w in chi}
    if sorted(r.r_s for r in ranks.values()) != list(range(len(chi))):
        return False
    for w in chi:
        for u in chi:
            if u in chi.parts[w].s_vertices:
                if not (ranks[u].r_s < ranks[w].r_s and ranks[u].r_t > ranks[w].r_t):
                    return False
    return True


def split_edge_to_f1(ctx, a):
    d = canonical_decomposition(a)
    owner = {e: i for i, ids in enumerate(d.edge_ids) for e in ids}
    hit = [owner[e] for e in splitting_edges(a)]
    return len(set(hit)) == len(hit) and all(
        d.edge_ids[i] == (e,) and isomorphic(d[i], F1) for i, e in zip(hit, splitting_edges(a))
    )


def split_edge_to_single_edge(ctx, a):
    d = canonical_decomposition(a)
    owner = {e: i for i, ids in enumerate(d.edge_ids) for e in ids}
    return all(d.edge_ids[owner[e]] == (e,) for e in splitting_edges(a))


def prod_decomp_length(ctx, a, b):
    return ctx.chi(alg.times(a, b)) == ctx.chi(a) + len(ctx.memo("delta", splitting_edges, a)) * ctx.chi(b)


def _nondegenerate(b: FlowGraph) -> bool:
    return b.q > 0 and b.source != b.target


def _nontrivial_s_standard(b: FlowGraph) -> bool:
    return b.q > 0 and is_s_standard(b)


def prod_irreducibility(ctx, a, b):
    if isomorphic(a, F1):
        return True
    if not is_oplus_irreducible(a):
        return True  # b = F1 already gives a reducible product
    return not splitting_vertices(alg.times(a, b)).members


def prod_irreducibility_definitional(ctx, a, b):
    if alg.is_unit(a) or not is_oplus_irreducible(a, Mode.DEFINITIONAL):
        return True
    return not splitting_vertices(alg.times(a, b)).members


def prod_decomp_structure(ctx, a, b):
    expected: list[FlowGraph] = []
    for comp in ctx.decomposition(a):
        if isomorphic(comp, F1):
            expected.extend(ctx.decomposition(b))
        else:
            expected.append(alg.times(comp, b))
    return _concat_matches(ctx, alg.times(a, b), expected)


def prod_decomp_structure_st(ctx, a, b):
    expected: list[FlowGraph] = []
    for comp in ctx.decomposition(a):
        if alg.is_unit(comp):
            expected.extend(canonical_decomposition(alg.times(comp, b)))
        else:
            expected.append(alg.times(comp, b))
    return _concat_matches(ctx, alg.times(a, b), expected)


def cancel_left(ctx, a, b, c):
    return b is c or not same(ctx.plus(a, b), ctx.plus(a, c))


def cancel_right(ctx, a, b, c):
    return b is c or not same(ctx.plus(b, a), ctx.plus(c, a))


def _common_base(a: FlowGraph, b: FlowGraph) -> bool:
    """Whether a = k1 C and b = k2 C for some C and k1, k2 >= 0 (0C meaning F0).

    C is searched among sums of leading components of the canonical decompositions.
    """
    if a.is_trivial or b.is_trivial:
        return True
    for base_of in (a, b):
        comps = canonical_decomposition(base_of).components
        for j in range(1, len(comps) + 1):
            c = alg.sum_all(comps[:j])
            if c.q == 0 or a.q % c.q or b.q % c.q:
                continue
            if isomorphic(alg.scalar_multiple(a.q // c.q, c), a) and isomorphic(
                alg.scalar_multiple(b.q // c.q, c), b
            ):
                return True
    return False


def _common_base_exhaustive(a: FlowGraph, b: FlowGraph) -> bool:
    """Same question answered by trying every C whose edge count divides both."""
    g = math.gcd(a.q, b.q)
    for d in range(1, g + 1):
        if g % d:
            continue
        ka, kb = a.q // d, b.q // d
        for c in alg._graphs_with_edges(d):
            # kC has k(p_C - 1) + 1 vertices
            if a.vertex_count != ka * (c.vertex_count - 1) + 1 or b.vertex_count != kb * (c.vertex_count - 1) + 1:
                continue
            if isomorphic(alg.scalar_multiple(ka, c), a) and isomorphic(alg.scalar_multiple(kb, c), b):
                return True
    return False


def comm_condition(ctx, a, b):
    commute = oplus_comm(ctx, a, b)
    base = _common_base(a, b)
    if commute and not base:
        base = _common_base_exhaustive(a, b)
    return commute == base


def strong_implies_weak(ctx, a, b):
    return not ctx.strong(a, b) or ctx.weak(a, b)


def strong_transitive(ctx, a, b, c):
    return not (ctx.strong(a, b) and ctx.strong(b, c)) or ctx.strong(a, c)


def weak_transitive(ctx, a, b, c):
    return not (ctx.weak(a, b) and ctx.weak(b, c)) or ctx.weak(a, c)


def strong_antisym(ctx, a, b):
    return a is b or not (ctx.strong(a, b) and ctx.strong(b, a)) or isomorphic(a, b)


def weak_antisym(ctx, a, b):
    return a is b or not (ctx.weak(a, b) and ctx.weak(b, a)) or isomorphic(a, b)


def strong_preserve_right_mul(ctx, a, b, c):
    return not ctx.strong(a, b) or strongly_below(ctx.times(a, c), ctx.times(b, c))


def strong_violation_plus(ctx, a, b, c):
    return not ctx.strong(a, b) or strongly_below(ctx.plus(a, c), ctx.plus(b, c))


def strong_violation_plus_left(ctx, a, b, c):
    return not ctx.strong(a, b) or strongly_below(ctx.plus(c, a), ctx.plus(c, b))


def strong_violation_left_mul(ctx, a, b, c):
    return not ctx.strong(a, b) or strongly_below(ctx.times(c, a), ctx.times(c, b))


def weak_preserve_all(ctx, a, b, c):
    if not ctx.weak(a, b):
        return True
    return (
        weakly_below(ctx.plus(a, c), ctx.plus(b, c))
        and weakly_below(ctx.plus(c, a), ctx.plus(c, b))
        and weakly_below(ctx.times(a, c), ctx.times(b, c))
    )


def weak_violation_left_mul(ctx, a, b, c):
    return not ctx.weak(a, b) or weakly_below(ctx.times(c, a), ctx.times(c, b))


def nat_submodel(ctx, a, b):
    m, n = a.q, b.q
    return (
        same(alg.plus(a, b), alg.nat(m + n))
        and same(alg.times(a, b), alg.nat(m * n))
        and weakly_below(a, b) == (m <= n)
        and strongly_below(a, b) == (m <= n)
    )


def _int_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def prime_nat_agreement(ctx, a):
    return alg.is_prime(a) == _int_prime(a.q)


def prime_nat_literal(ctx, a):
    return alg.is_right_prime(a, units=False) == _int_prime(a.q)


def left_right_prime_agree(ctx, a):
    return alg.is_right_prime(a) == alg.is_left_prime(a)


def cut_vertex_splitting(ctx, a):
    return cut_vertices(a) <= set(splitting_vertices(a))


def irreducibility_modes(ctx, a):
    if a.is_infinitesimal:
        return True
    return is_oplus_irreducible(a) == is_oplus_irreducible(a, "definitional")


def _standard(a: FlowGraph) -> bool:
    return is_s_standard(a) and is_t_standard(a)


# --------------------------------------------------------------------------
# custom pools and tuple orders


def _nat_pools(n_max: int, arity: int, start: int = 0):
    def build(override):
        return [[alg.nat(i) for i in range(start, n_max + 1)] for _ in range(arity)]

    return build


def _related_triples(rel: str):
    """Triples (a, b, c) with a R b and b R c, in pool order."""

    def gen(pools, ctx):
        pa, pb, pc = pools
        r = getattr(ctx, rel)
        for a in pa:
            for b in pb:
                if not r(a, b):
                    continue
                for c in pc:
                    if r(b, c):
                        yield (a, b, c)

    return gen


def _colliding_triples(side: str):
    """For each A, pair every B with the first earlier C whose sum with A has the same key.

    Yields one tuple per (A, B) pair, so the instance count is the number of
    pairs swept; a tuple with C not B is a genuine collision. This covers all
    triples of the pools while only computing pair sums.
    """

    def gen(pools, ctx):
        pa, pb, _ = pools
        for a in pa:
            seen: dict[bytes, FlowGraph] = {}
            for b in pb:
                s = alg.plus(a, b) if side == "left" else alg.plus(b, a)
                yield (a, b, seen.setdefault(canonical_key(s), b))

    return gen


def cancel_left_sweep(ctx, a, b, c):
    return b is c or not same(alg.plus(a, b), alg.plus(a, c))


def cancel_right_sweep(ctx, a, b, c):
    return b is c or not same(alg.plus(b, a), alg.plus(c, a))


def componentwise_sum(ctx, a, b, c):
    """A+B == C+A with A, B, C irreducible forces A == C and B == A."""
    if not same(ctx.plus(a, b), ctx.plus(c, a)):
        return True
    return same(a, c) and same(b, a)


def _irreducible(a: FlowGraph) -> bool:
    return a.q > 0 and is_oplus_irreducible(a)


def _st_irreducible(a: FlowGraph) -> bool:
    return _irreducible(a) and _st(a)


# --------------------------------------------------------------------------
# catalog

U2, U3, U4, U5 = (UniverseSpec(max_edges=k) for k in (2, 3, 4, 5))
ST3, ST4, ST5 = (UniverseSpec(max_edges=k, st_only=True) for k in (3, 4, 5))
C3 = cycle(3)
SQ_FAR, SQ_NEAR = cycle(4, 2), cycle(4, 1)

_LAWS = [
    Law("oplus_assoc", 3, "(A+B)+C == A+(B+C)", oplus_assoc, universe=U3),
    Law("oplus_comm", 2, "A+B == B+A", oplus_comm, "fails", U3, named=lambda: (C3, F2)),
    Law("oplus_identity", 2, "A+F0 == A == F0+A; A+G == A iff G == F0 iff G+A == A", oplus_identity, universe=(U4, U3)),
    Law("oplus_count_formulas", 2, "p(A+B) = pA+pB-1, q(A+B) = qA+qB; injections glue t_A to s_B", oplus_counts),
    Law("otimes_assoc", 3, "(A*B)*C == A*(B*C)", otimes_assoc, universe=U3),
    Law("otimes_comm", 2, "A*B == B*A", otimes_comm, "fails", U3, named=lambda: (C3, F2)),
    Law(
        "otimes_identity", 2,
        "non-infinitesimal A: A*G == A iff G == F1 iff G*A == A; infinitesimal A: only G = C1 with A = qA C1",
        otimes_identity, universe=(U4, U3),
        note="rev(F1) fixes every A isomorphic to its own reversal; for infinitesimal A every one-edge G is a left identity and the s=t pendant P has P*P == P",
    ),
    Law(
        "otimes_identity_units", 2,
        "non-infinitesimal A: A*G == A iff G == F1 or (G == rev(F1) and rev(A) == A); dually on the left with swap",
        otimes_identity_units, universe=(U4, U3),
    ),
    Law(
        "otimes_identity_infinitesimal", 2,
        "infinitesimal A: A*G == A iff G is F1, rev(F1) with rev(A) == A, or X in {C1, pendants} with A == qA X; "
        "G*A == A iff qG == 1",
        otimes_identity_infinitesimal, universe=(U4, U3),
    ),
    Law(
        "otimes_identity_exception", 2, "A*G == A implies G == F1", otimes_identity_exception, "fails", U3,
        named=lambda: (C1, C1),
    ),
    Law("otimes_zero", 2, "A*F0 == F0; G*H == F0 iff G == F0 or H == F0", otimes_zero, universe=(U4, U3)),
    Law("otimes_count_formulas", 2, "vertex/edge counts of A*B and the edge bijection", otimes_counts),
    Law("eta_independence", 2, "A*B does not depend on the edge enumeration", eta_independence, universe=U3),
    Law("right_distrib", 3, "(A+B)*C == A*C + B*C", right_distrib, universe=U3),
    Law("left_distrib", 3, "A*(B+C) == A*B + A*C", left_distrib, "fails", U3, named=lambda: (C3, F1, F1)),
    Law(
        "right_div_distrib", 3, "A/B + C/B is a right quotient of A+C by B (A = K1*B, C = K2*B)",
        right_div_distrib, universe=U2, filters=(None, None, _nontrivial),
    ),
    Law(
        "div_chain_rules", 3, "(A/B)*(B/C) is a valid A/C and (B\\C)*(A\\B) a valid A\\C",
        div_chain_rules, universe=(U2, UniverseSpec(max_edges=1), U2),
        filters=(_nontrivial, _nontrivial, _nontrivial),
    ),
    Law("st_closure", 2, "A, B st implies A+B st", st_closure, universe=ST4),
    Law("st_closure_reverse", 2, "A+B st implies A, B st", st_closure_reverse, universe=U3),
    Law("core_distributes", 2, "core(A+B) == core(A)+core(B)", core_distributes, universe=U3),
    Law(
        "crossing_summands", 3,
        "st C embedded in A+B (source anchored) beyond the left summand pulls the glue back to a splitting vertex",
        crossing_summands, universe=(U2, U2, ST3), filters=(None, None, _nontrivial),
        note="fails when A or B is trivial or infinitesimal: the glue is then an endpoint of A+B",
    ),
    Law(
        "crossing_summands_nondegenerate", 3, "crossing summands for st C when A and B both have s != t",
        crossing_summands, universe=(U2, U2, ST3), filters=(_nondegenerate, _nondegenerate, _nontrivial),
    ),
    Law(
        "crossing_summands_general", 3, "crossing summands for arbitrary C", crossing_summands, "fails",
        (U3, U3, U3), filters=(None, None, _nontrivial),
    ),
    Law(
        "componentwise_iso", 2, "st A == B iff their canonical decompositions agree componentwise",
        componentwise_iso, universe=ST4,
    ),
    Law(
        "componentwise_iso_canonical", 2, "A == B iff <A> and <B> agree componentwise, for arbitrary graphs",
        componentwise_iso, universe=U3,
        note="the canonical decomposition is an isomorphism invariant, so no st restriction is needed",
    ),
    Law(
        "componentwise_sum", 3, "st irreducible A, B, C with A+B == C+A have A == C == B", componentwise_sum,
        universe=ST3, filters=(_st_irreducible, _st_irreducible, _st_irreducible),
    ),
    Law(
        "componentwise_sum_general", 3, "irreducible A, B, C with A+B == C+A have A == C == B", componentwise_sum,
        "fails", U2, filters=(_irreducible, _irreducible, _irreducible),
    ),
    Law("decomp_recompose", 1, "the canonical decomposition has |chi|+1 irreducible parts summing to A", decomp_recompose, universe=U5),
    Law(
        "decomp_for_sums", 2, "<A+B> = <A><B> when B is s-standard", decomp_for_sums, universe=U3,
        filters=(None, is_s_standard),
        note="fails when A is trivial or infinitesimal or B is trivial: the glue is then an endpoint",
    ),
    Law(
        "decomp_for_sums_nondegenerate", 2, "<A+B> = <A><B> when A has s != t and B is nontrivial and s-standard",
        decomp_for_sums, universe=U3, filters=(_nondegenerate, _nontrivial_s_standard),
    ),
    Law("decomp_for_sums_general", 2, "<A+B> = <A><B>", decomp_for_sums, "fails", U3),
    Law("rank_total", 1, "r_s + r_t + 1 = |chi|", rank_total, universe=U5),
    Law("rank_unique", 1, "s-ranks are 0..|chi|-1 and strictly monotone along the s side", rank_unique, universe=U5),
    Law(
        "split_edge_to_F1", 1, "each splitting edge is alone in an F1 component of <A>", split_edge_to_f1,
        universe=U5, note="rev(F1) is a single splitting edge that is not F1",
    ),
    Law(
        "split_edge_to_single_edge", 1, "each splitting edge is alone in its component of <A>",
        split_edge_to_single_edge, universe=ST5,
    ),
    Law(
        "split_edge_to_single_edge_general", 1, "splitting edges alone in their component for arbitrary A",
        split_edge_to_single_edge, "fails", U4,
    ),
    Law(
        "prod_decomp_length", 2, "|chi(A*B)| = |chi(A)| + |Delta(A)| |chi(B)|", prod_decomp_length, universe=U3,
        note="fails when B is trivial or infinitesimal: the product collapses to s = t",
    ),
    Law(
        "prod_decomp_length_nondegenerate", 2, "|chi(A*B)| = |chi(A)| + |Delta(A)| |chi(B)| for B with s != t",
        prod_decomp_length, universe=U3, filters=(None, _nondegenerate),
    ),
    Law(
        "prod_irreducibility", 2, "A != F1 irreducible implies A*B irreducible", prod_irreducibility, universe=U3,
        note="rev(F1) is irreducible yet rev(F1)*F2 is not",
    ),
    Law(
        "prod_irreducibility_definitional", 2,
        "A irreducible (definitional) and not a unit implies A*B has no splitting vertex",
        prod_irreducibility_definitional, universe=U3,
    ),
    Law(
        "prod_decomp_structure", 2, "<A*B> concatenates <B> for F1 parts and part*B otherwise",
        prod_decomp_structure, universe=U3,
        note="fails when B is trivial or infinitesimal: the product collapses to s = t",
    ),
    Law(
        "prod_decomp_structure_st", 2, "decomposition of A*B for st A and st B with s != t, either unit expanding",
        prod_decomp_structure_st, universe=U3, filters=(_st, lambda b: _nondegenerate(b) and _st(b)),
    ),
    Law("cancel_left", 3, "st: A+B == A+C implies B == C", cancel_left, universe=ST3, filters=(_st, _st, _st)),
    Law("cancel_right", 3, "st: B+A == C+A implies B == C", cancel_right, universe=ST3, filters=(_st, _st, _st)),
    Law(
        "cancel_left_general", 3, "A+B == A+C implies B == C", cancel_left_sweep, "fails", (U2, U4, U4),
        tuples=_colliding_triples("left"),
        note="swept by bucketing A+B on its canonical key; an isomorphism of sums fixes the glue, so none is expected",
    ),
    Law(
        "cancel_right_general", 3, "B+A == C+A implies B == C", cancel_right_sweep, "fails", (U2, U4, U4),
        tuples=_colliding_triples("right"),
        note="swept by bucketing B+A on its canonical key; an isomorphism of sums fixes the glue, so none is expected",
    ),
    Law(
        "comm_condition", 2, "st: A+B == B+A iff A = k1 C and B = k2 C", comm_condition, universe=ST4,
    ),
    Law("comm_condition_general", 2, "A+B == B+A iff A = k1 C and B = k2 C", comm_condition, "fails", U3),
    Law("strong_implies_weak", 2, "A << B implies A <= B", strong_implies_weak, universe=U3),
    Law(
        "strong_transitive", 3, "A << B and B << C imply A << C", strong_transitive, universe=U3,
        tuples=_related_triples("strong"),
    ),
    Law(
        "strong_antisym", 2, "A << B and B << A imply A == B", strong_antisym, "fails", U3,
        named=lambda: (SQ_FAR, SQ_NEAR),
    ),
    Law("weak_transitive", 3, "A <= B and B <= C imply A <= C", weak_transitive, "fails", U4),
    Law(
        "weak_antisym", 2, "A <= B and B <= A imply A == B", weak_antisym, "fails", U3,
        named=lambda: (SQ_FAR, SQ_NEAR),
    ),
    Law(
        "strong_preserve_right_mul", 3, "A << B implies A*C << B*C", strong_preserve_right_mul,
        universe=(U3, U3, U2),
    ),
    Law("strong_violation_plus", 3, "A << B implies A+C << B+C", strong_violation_plus, "fails", U3),
    Law("strong_violation_plus_left", 3, "A << B implies C+A << C+B", strong_violation_plus_left, "fails", U3),
    Law("strong_violation_left_mul", 3, "A << B implies C*A << C*B", strong_violation_left_mul, "fails", U3),
    Law(
        "weak_preserve_all", 3, "A <= B implies A+C <= B+C, C+A <= C+B, A*C <= B*C", weak_preserve_all,
        universe=(U3, U3, U2),
    ),
    Law("weak_violation_left_mul", 3, "A <= B implies C*A <= C*B", weak_violation_left_mul, "fails", U3),
    Law(
        "nat_submodel", 2, "F_m + F_n == F_{m+n}, F_m * F_n == F_{mn}, both orders match m <= n (m, n <= 8)",
        nat_submodel, pools=_nat_pools(8, 2),
    ),
    Law("infinitesimal_product_law", 2, "G*H infinitesimal iff a factor is (G, H nontrivial)", infinitesimal_product_law, universe=(U4, U3)),
    Law("scalar_comm_reduction", 1, "(k-1)A + A == A + (k-1)A for k <= 4", scalar_comm_reduction),
    Law(
        "prime_nat_agreement", 1, "F_n prime iff n prime (2 <= n <= 8)", prime_nat_agreement,
        pools=_nat_pools(8, 1, start=2),
    ),
    Law(
        "prime_nat_literal", 1, "F_n prime iff n prime, primes read as 'only F1 and A divide A'",
        prime_nat_literal, "fails", pools=_nat_pools(8, 1, start=2),
        note="F_n / rev(F1) = rev(F_n) always exists, so no F_n passes the literal test",
    ),
    Law("left_right_prime_agree", 1, "right-prime iff left-prime", left_right_prime_agree),
    Law(
        "cut_vertex_splitting", 1, "st: every cut vertex other than s, t is a splitting vertex", cut_vertex_splitting,
        universe=UniverseSpec(max_edges=5, st_only=True),
    ),
    Law("cut_vertex_splitting_general", 1, "every cut vertex other than s, t is a splitting vertex", cut_vertex_splitting, "fails"),
    Law(
        "irreducibility_modes", 1, "non-infinitesimal: no splitting vertex iff not a sum of two nontrivial graphs",
        irreducibility_modes, "fails",
        note="an infinitesimal summand at s or t hides the glue from the splitting-vertex test",
    ),
    Law(
        "irreducibility_modes_standard", 1, "s- and t-standard: no splitting vertex iff not a nontrivial sum",
        irreducibility_modes, filters=(_standard,),
    ),
]

CATALOG: dict[str, Law] = {law.id: law for law in _LAWS}
