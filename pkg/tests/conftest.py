from __future__ import annotations

import functools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from fga.core import FlowGraph
from fga.explorer.enumerate import UniverseSpec, universe

settings.register_profile(
    "fga", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("fga")


def g(n, edges, s, t) -> FlowGraph:
    return FlowGraph(n, tuple(map(tuple, edges)), s, t)


def cycle(n: int, t: int = 1) -> FlowGraph:
    """Directed n-cycle 0 -> 1 -> ... -> 0 with s = 0."""
    return g(n, [(i, (i + 1) % n) for i in range(n)], 0, t)


F0 = g(1, [], 0, 0)
F1 = g(2, [(0, 1)], 0, 1)
C1 = g(1, [(0, 0)], 0, 0)
REV = g(2, [(1, 0)], 0, 1)
C3 = cycle(3)
SQ_FAR, SQ_NEAR = cycle(4, 2), cycle(4, 1)
# F2 with a pendant edge hanging off the midpoint
PENDANT = g(4, [(0, 1), (1, 2), (1, 3)], 0, 2)


@st.composite
def flow_graphs(draw, max_vertices: int = 5, max_extra: int = 3, allow_trivial: bool = True):
    """Random weakly connected multigraphs: a random spanning tree plus extra edges, loops allowed."""
    n = draw(st.integers(1, max_vertices))
    edges = []
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.append((u, v) if draw(st.booleans()) else (v, u))
    extra = draw(st.integers(0 if (allow_trivial or n > 1) else 1, max_extra))
    for _ in range(extra):
        edges.append((draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))))
    edges = draw(st.permutations(edges)) if edges else []
    s = draw(st.integers(0, n - 1))
    t = draw(st.integers(0, n - 1))
    return FlowGraph(n, tuple(edges), s, t)


def nontrivial_flow_graphs(**kw):
    return flow_graphs(allow_trivial=False, **kw).filter(lambda x: x.q > 0)


@functools.lru_cache(maxsize=None)
def cached_universe(max_edges: int, st_only: bool = False) -> tuple[FlowGraph, ...]:
    return tuple(universe(UniverseSpec(max_edges=max_edges, st_only=st_only)))


@pytest.fixture(scope="session")
def u3():
    return cached_universe(3)


@pytest.fixture(scope="session")
def u4():
    return cached_universe(4)


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE: dict[int, list[tuple[bool, str]]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[crit]
        ok = all(p for p, _ in parts)
        failed = [d for p, d in parts if not p]
        detail = "; ".join(failed) if failed else f"{len(parts)} checks"
        terminalreporter.write_line(f"criterion {crit}: {'PASS' if ok else 'FAIL'} ({detail})")
