from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import C1, C3, F0, F1, PENDANT, SQ_FAR, SQ_NEAR, cached_universe, flow_graphs, g
from fga import algebra as alg
from fga.core import (
    FlowGraph,
    Kind,
    are_isomorphic,
    canonical_form,
    canonical_key,
    check_simple_st_path,
    classify,
    find_anchored_embeddings,
    identity_map,
    is_st_flow_graph,
    isomorphic,
    key_from_bytes,
    new_flow_graph,
    relabel,
    st_edge_flags,
    trivial,
    undirected_form,
    verify_embedding,
    verify_isomorphism,
)
from fga.errors import ValidationError


def nx_isomorphic(a: FlowGraph, b: FlowGraph) -> bool:
    """Oracle: networkx multigraph isomorphism with the roles of s and t as node labels."""

    def build(x):
        h = nx.MultiDiGraph()
        for v in range(x.vertex_count):
            h.add_node(v, role=(v == x.source, v == x.target))
        h.add_edges_from(x.edges)
        return h

    return nx.is_isomorphic(build(a), build(b), node_match=lambda p, q: p["role"] == q["role"])


def simple_st_paths(a: FlowGraph):
    """Oracle: every simple s-t path of U(G) as a set of edge ids, by brute force over edge sequences."""
    out = []
    s, t = a.source, a.target
    if s == t:
        return out
    for k in range(1, a.vertex_count):
        for seq in itertools.permutations(range(a.q), k):
            x, seen, ok = s, {s}, True
            for e in seq:
                u, v = a.edges[e]
                if u == v:
                    ok = False
                    break
                y = v if u == x else u if v == x else None
                if y is None or y in seen:
                    ok = False
                    break
                seen.add(y)
                x = y
            if ok and x == t:
                out.append(set(seq))
    return out


class TestConstruction:
    def test_trivial(self):
        a = new_flow_graph(1, [], 0, 0)
        assert a == trivial() and a.p == 1 and a.q == 0

    def test_chain(self):
        a = new_flow_graph(2, [(0, 1)], 0, 1)
        assert a == alg.nat(1)

    def test_disconnected_rejected(self):
        with pytest.raises(ValidationError):
            new_flow_graph(3, [(0, 1)], 0, 2)

    @pytest.mark.parametrize(
        "args",
        [(0, [], 0, 0), (2, [(0, 1)], 0, 2), (2, [(0, 2)], 0, 1), (2, [(-1, 0)], 0, 1)],
    )
    def test_out_of_range(self, args):
        with pytest.raises(ValidationError):
            new_flow_graph(*args)

    def test_loops_and_parallel_edges_allowed(self):
        a = g(2, [(0, 1), (0, 1), (1, 1)], 0, 1)
        assert a.q == 3 and a.loops(1) == 1 and a.out_degree(0) == 2

    def test_immutable(self):
        with pytest.raises(Exception):
            F1.source = 1  # type: ignore[misc]


class TestClassify:
    @pytest.mark.parametrize(
        "a, kind",
        [(F0, Kind.TRIVIAL), (C1, Kind.INFINITESIMAL), (alg.nat(3), Kind.GENERAL), (g(2, [(0, 1)], 1, 1), Kind.INFINITESIMAL)],
    )
    def test_examples(self, a, kind):
        assert classify(a) is kind


class TestUndirectedForm:
    def test_chain(self):
        u = undirected_form(alg.nat(2))
        assert [(x, y) for x, y, _ in u.edges] == [(0, 1), (1, 2)]

    def test_loop(self):
        assert undirected_form(C1).edges == ((0, 0, 0),)

    def test_parallel(self):
        u = undirected_form(g(2, [(0, 1), (1, 0)], 0, 1))
        assert [(x, y) for x, y, _ in u.edges] == [(0, 1), (0, 1)]
        assert u.directed(1) == (1, 0)


class TestStProperty:
    def test_chain(self):
        ok, flags = is_st_flow_graph(alg.nat(5))
        assert ok and all(flags)

    def test_infinitesimal_never_st(self):
        assert not is_st_flow_graph(C1)[0]

    def test_trivial_vacuous(self):
        assert is_st_flow_graph(F0)[0]

    def test_pendant(self):
        ok, flags = is_st_flow_graph(PENDANT)
        assert not ok and flags == (True, True, False)

    def test_witness_paths_verify(self, u3):
        for a in u3:
            flags, witness = st_edge_flags(a)
            for e, flagged in enumerate(flags):
                if flagged:
                    assert e in witness[e] and check_simple_st_path(a, witness[e])

    def test_flags_match_path_oracle(self, u3):
        for a in u3:
            if a.q == 0:
                continue
            covered = set().union(*simple_st_paths(a)) if a.source != a.target else set()
            flags, _ = st_edge_flags(a)
            assert {e for e, f in enumerate(flags) if f} == covered


class TestIsomorphism:
    def test_identity(self):
        m = are_isomorphic(alg.nat(3), alg.nat(3))
        assert m is not None and verify_isomorphism(m)

    def test_four_cycles_differ(self):
        assert are_isomorphic(SQ_FAR, SQ_NEAR) is None

    def test_three_cycle_sums_differ(self):
        f2 = alg.nat(2)
        assert not isomorphic(alg.plus(C3, f2), alg.plus(f2, C3))

    def test_anchors_respected(self):
        assert not isomorphic(F1, g(2, [(1, 0)], 0, 1))

    def test_parallel_edges_counted(self):
        assert not isomorphic(g(2, [(0, 1), (0, 1)], 0, 1), g(2, [(0, 1), (1, 0)], 0, 1))

    def test_agrees_with_networkx(self, u3):
        pool = list(u3)
        for a, b in itertools.product(pool[:120], repeat=2):
            assert isomorphic(a, b) == nx_isomorphic(a, b)

    @given(flow_graphs(), st.randoms(use_true_random=False))
    def test_relabel_invariance(self, a, rnd):
        perm = list(range(a.vertex_count))
        rnd.shuffle(perm)
        order = list(range(a.q))
        rnd.shuffle(order)
        b = relabel(a, perm, order)
        m = are_isomorphic(a, b)
        assert m is not None and verify_isomorphism(m)
        assert canonical_key(a) == canonical_key(b)

    @given(flow_graphs(), flow_graphs())
    def test_key_iff_isomorphic(self, a, b):
        assert (canonical_key(a) == canonical_key(b)) == isomorphic(a, b) == nx_isomorphic(a, b)

    @given(flow_graphs(), flow_graphs(), flow_graphs())
    def test_equivalence_relation(self, a, b, c):
        ab, bc = are_isomorphic(a, b), are_isomorphic(b, c)
        if ab is not None:
            assert verify_isomorphism(ab.inverse())
            if bc is not None:
                assert verify_isomorphism(ab.compose(bc))


class TestCanonicalKey:
    def test_sum_of_units(self):
        assert canonical_key(alg.nat(3)) == canonical_key(alg.sum_all([F1, F1, F1]))

    def test_four_cycles(self):
        assert canonical_key(SQ_FAR) != canonical_key(SQ_NEAR)

    def test_all_relabelings_of_chain(self):
        a = alg.nat(5)
        k = canonical_key(a)
        for perm in itertools.permutations(range(6)):
            assert canonical_key(relabel(a, perm)) == k

    @given(flow_graphs())
    def test_form_round_trip(self, a):
        c = canonical_form(a)
        assert isomorphic(a, c) and key_from_bytes(canonical_key(a)) == c


class TestEmbeddings:
    def test_chain_into_longer_chain(self):
        ms = list(find_anchored_embeddings(alg.nat(3), alg.nat(5), ("source",)))
        assert len(ms) == 1 and verify_embedding(ms[0], {0: 0})

    def test_longer_chain_does_not_fit(self):
        assert not list(find_anchored_embeddings(alg.nat(5), alg.nat(3), ("source",)))

    def test_trivial_needs_shared_anchor(self):
        assert not list(find_anchored_embeddings(F0, F1, ("source", "target")))
        assert len(list(find_anchored_embeddings(F0, C1, ("source", "target")))) == 1

    def test_edges_injective(self):
        double = g(2, [(0, 1), (0, 1)], 0, 1)
        assert not list(find_anchored_embeddings(double, F1, ()))
        # parallel edges are interchangeable: one embedding per vertex map
        ms = list(find_anchored_embeddings(F1, double, ("source",)))
        assert len(ms) == 1 and ms[0].edge == {0: 0}

    def test_identity_map_verifies(self):
        assert verify_isomorphism(identity_map(C3))


def test_enumerated_universe_has_distinct_classes():
    pool = cached_universe(2)
    for a, b in itertools.combinations(pool, 2):
        assert not nx_isomorphic(a, b)
