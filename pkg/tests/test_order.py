from __future__ import annotations

import itertools
from collections import Counter

import networkx as nx
import pytest

from conftest import C1, C3, F0, F1, SQ_FAR, SQ_NEAR, cached_universe, g
from fga import algebra as alg
from fga.config import Budget
from fga.core import FlowGraph
from fga.errors import SearchBudgetExceeded
from fga.order import (
    enumerate_st_splittings,
    is_st_splitting,
    strong_leq,
    strongly_below,
    verify_strong_witness,
    verify_weak_witness,
    weak_leq,
    weakly_below,
)


def oracle_splittings(a: FlowGraph):
    """(H1 edges, H1 vertices, H2 edges, H2 vertices) for every valid edge bipartition."""
    out = []
    for mask in range(1 << a.q):
        parts = []
        for side, anchor in ((0, a.source), (1, a.target)):
            ids = [e for e in range(a.q) if (mask >> e & 1) == side]
            h = nx.MultiGraph()
            h.add_node(anchor)
            h.add_edges_from(a.edges[e] for e in ids)
            parts.append((frozenset(ids), frozenset(h.nodes), nx.is_connected(h)))
        (e1, v1, c1), (e2, v2, c2) = parts
        if c1 and c2 and v1 | v2 == set(range(a.p)):
            out.append((e1, v1, e2, v2))
    return out


def _fits(pattern: Counter, host: Counter, phi) -> bool:
    need = Counter({(phi[u], phi[v]): k for (u, v), k in pattern.items()})
    return all(host[x] >= k for x, k in need.items())


def _maps(vertices, host: FlowGraph, pins):
    vertices = sorted(vertices)
    free = [v for v in vertices if v not in pins]
    for img in itertools.permutations([x for x in range(host.p) if x not in pins.values()], len(free)):
        phi = dict(pins)
        phi.update(zip(free, img))
        yield phi


def oracle_strong(a: FlowGraph, b: FlowGraph) -> bool:
    pat, host = Counter(a.edges), Counter(b.edges)
    return all(
        any(_fits(pat, host, phi) for phi in _maps(range(a.p), b, {anchor_a: anchor_b}))
        for anchor_a, anchor_b in ((a.source, b.source), (a.target, b.target))
    )


def oracle_weak(a: FlowGraph, b: FlowGraph) -> bool:
    host = Counter(b.edges)
    for e1, v1, e2, v2 in oracle_splittings(a):
        p1, p2 = Counter(a.edges[e] for e in e1), Counter(a.edges[e] for e in e2)
        for phi1 in _maps(v1, b, {a.source: b.source}):
            if not _fits(p1, host, phi1):
                continue
            used = Counter({(phi1[u], phi1[v]): k for (u, v), k in p1.items()})
            rest = host - used
            if any(_fits(p2, rest, phi2) for phi2 in _maps(v2, b, {a.target: b.target})):
                return True
    return False


class TestSplittings:
    @pytest.mark.parametrize("a, n", [(F0, 1), (F1, 2), (alg.nat(2), 3)])
    def test_counts(self, a, n):
        assert len(list(enumerate_st_splittings(a))) == n

    def test_degenerate_first(self):
        first = next(enumerate_st_splittings(C3))
        assert first.h1_edges == frozenset(range(3)) and first.h2_vertices == {C3.target}

    def test_matches_oracle(self, u3):
        for a in u3:
            got = [(s.h1_edges, s.h1_vertices, s.h2_edges, s.h2_vertices) for s in enumerate_st_splittings(a)]
            assert sorted(got, key=repr) == sorted(oracle_splittings(a), key=repr)
            assert all(is_st_splitting(a, s) for s in enumerate_st_splittings(a))


class TestWeak:
    def test_chains(self):
        f3, f5 = alg.nat(3), alg.nat(5)
        w = weak_leq(f3, f5)
        assert w is not None and verify_weak_witness(f3, f5, w)
        assert weak_leq(alg.nat(5), alg.nat(3)) is None

    def test_reflexive(self, u3):
        for a in u3:
            assert weakly_below(a, a)

    def test_four_cycles_both_ways(self):
        assert weakly_below(SQ_FAR, SQ_NEAR) and weakly_below(SQ_NEAR, SQ_FAR)

    def test_matches_oracle(self):
        small, big = cached_universe(2), cached_universe(3)
        for a in small:
            for b in big:
                assert weakly_below(a, b) == oracle_weak(a, b), (a, b)

    def test_witness_text(self):
        text = weak_leq(alg.nat(1), alg.nat(2)).as_text()
        assert text.startswith("H1 edges:") and "phi2" in text


class TestStrong:
    def test_chains(self):
        f3, f5 = alg.nat(3), alg.nat(5)
        w = strong_leq(f3, f5)
        assert w is not None and verify_strong_witness(f3, f5, w)
        assert strong_leq(alg.nat(5), alg.nat(3)) is None

    def test_four_cycles_both_ways(self):
        assert strongly_below(SQ_FAR, SQ_NEAR) and strongly_below(SQ_NEAR, SQ_FAR)

    def test_degree_three_does_not_fit(self):
        claw = g(4, [(0, 1), (1, 2), (1, 3)], 0, 2)
        for b in (alg.nat(4), C3, alg.times(C3, alg.nat(2))):
            assert max(b.out_degree(v) + b.in_degree(v) for v in range(b.p)) <= 2
            assert not strongly_below(claw, b)

    def test_matches_oracle(self):
        small, big = cached_universe(2), cached_universe(3)
        for a in small:
            for b in big:
                assert strongly_below(a, b) == oracle_strong(a, b), (a, b)

    def test_implies_weak(self, u3):
        pool = u3[:150]
        for a in pool:
            for b in pool:
                if strongly_below(a, b):
                    assert weakly_below(a, b)

    def test_loop_target(self):
        assert strongly_below(C1, alg.plus(C1, C1))


@pytest.mark.parametrize("m, n", list(itertools.product(range(9), repeat=2)))
def test_chain_orders_match_integers(m, n):
    a, b = alg.nat(m), alg.nat(n)
    assert weakly_below(a, b) == strongly_below(a, b) == (m <= n)


def test_budget_enforced():
    with pytest.raises(SearchBudgetExceeded):
        weak_leq(alg.nat(13), alg.nat(13))
    with pytest.raises(SearchBudgetExceeded):
        strong_leq(F1, alg.nat(5), Budget(max_vertices=4))
