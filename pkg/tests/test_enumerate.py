from __future__ import annotations

import itertools

import networkx as nx
import pytest

from fga.core import canonical_key, is_st_flow_graph
from fga.explorer.enumerate import UniverseSpec, connected_multigraphs, enumerate_flow_graphs, universe


def _nx(n, edges, s, t):
    h = nx.MultiDiGraph()
    for v in range(n):
        h.add_node(v, role=(v == s, v == t))
    h.add_edges_from(edges)
    return h


def oracle_classes(q: int) -> int:
    """Isomorphism classes of flow graphs with exactly q edges, by brute force over labelled graphs."""
    reps: dict[tuple, list[nx.MultiDiGraph]] = {}
    match = lambda a, b: a["role"] == b["role"]  # noqa: E731
    count = 0
    for n in range(1, q + 2):
        pairs = list(itertools.product(range(n), repeat=2))
        for edges in itertools.combinations_with_replacement(pairs, q):
            und = nx.MultiGraph()
            und.add_nodes_from(range(n))
            und.add_edges_from(edges)
            if not nx.is_connected(und):
                continue
            for s, t in itertools.product(range(n), repeat=2):
                h = _nx(n, edges, s, t)
                inv = (n, tuple(sorted((h.in_degree(v), h.out_degree(v), v == s, v == t) for v in h)))
                bucket = reps.setdefault(inv, [])
                if not any(nx.is_isomorphic(h, r, node_match=match) for r in bucket):
                    bucket.append(h)
                    count += 1
    return count


def oracle_unanchored(q: int) -> int:
    reps: list[nx.MultiDiGraph] = []
    for n in range(1, q + 2):
        pairs = list(itertools.product(range(n), repeat=2))
        for edges in itertools.combinations_with_replacement(pairs, q):
            h = nx.MultiDiGraph()
            h.add_nodes_from(range(n))
            h.add_edges_from(edges)
            if nx.is_weakly_connected(h) and not any(nx.is_isomorphic(h, r) for r in reps):
                reps.append(h)
    return len(reps)


class TestCounts:
    @pytest.mark.parametrize("q", [0, 1, 2, 3])
    def test_exact_level_matches_oracle(self, q):
        got = [a for a in universe(UniverseSpec(max_edges=q, min_edges=q))]
        assert len(got) == oracle_classes(q)

    def test_cumulative_snapshot(self):
        # frozen after the oracle above agreed on the first four levels
        assert [len(universe(UniverseSpec(max_edges=k))) for k in range(5)] == [1, 6, 40, 288, 2223]

    def test_one_edge_classes(self):
        texts = sorted((a.p, a.edges, a.source, a.target) for a in universe(UniverseSpec(max_edges=1)))
        assert len(texts) == 6


class TestProperties:
    def test_distinct_keys(self):
        pool = universe(UniverseSpec(max_edges=4))
        assert len({canonical_key(a) for a in pool}) == len(pool)

    def test_ascending_keys(self):
        keys = [canonical_key(a) for a in universe(UniverseSpec(max_edges=3))]
        assert keys == sorted(keys)

    def test_st_only(self):
        spec = UniverseSpec(max_edges=3, st_only=True)
        got = universe(spec)
        assert got and all(is_st_flow_graph(a)[0] for a in got)
        full = [a for a in universe(UniverseSpec(max_edges=3)) if is_st_flow_graph(a)[0]]
        assert {canonical_key(a) for a in got} == {canonical_key(a) for a in full}

    def test_vertex_bound(self):
        got = universe(UniverseSpec(max_edges=3, max_vertices=2))
        assert all(a.p <= 2 for a in got)

    def test_without_infinitesimals(self):
        got = universe(UniverseSpec(max_edges=2, include_infinitesimals=False))
        assert all(not a.is_infinitesimal for a in got)

    def test_deterministic(self):
        spec = UniverseSpec(max_edges=3)
        assert [canonical_key(a) for a in enumerate_flow_graphs(spec)] == [canonical_key(a) for a in universe(spec)]

    @pytest.mark.parametrize("q", [1, 2, 3])
    def test_connected_multigraphs(self, q):
        got = connected_multigraphs(q, q + 1)
        graphs = [_nx(a.vertex_count, a.edges, 0, 0) for a in got]
        for h in graphs:
            for v in h:
                h.nodes[v]["role"] = None
        assert all(not nx.is_isomorphic(x, y) for x, y in itertools.combinations(graphs, 2))
        assert len(got) == oracle_unanchored(q)

    def test_bad_spec(self):
        with pytest.raises(ValueError):
            UniverseSpec(max_edges=-1)
