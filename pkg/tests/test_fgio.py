from __future__ import annotations

import pytest
from hypothesis import given

from conftest import C1, F0, F1, flow_graphs
from fga.core import isomorphic
from fga.errors import FormatError
from fga.fgio import parse_fg, read_fg, save_fg, to_dot, write_fg


class TestParse:
    def test_chain(self):
        assert parse_fg("fg 1\nv 2\ns 0\nt 1\ne 0 1\n") == F1

    def test_comments_and_blank_lines(self):
        text = "# a loop\nfg 1\n\nv 1  # one vertex\ns 0\nt 0\ne 0 0\n"
        assert parse_fg(text) == C1

    def test_edge_order_kept_as_ids(self):
        a = parse_fg("fg 1\nv 3\ns 0\nt 2\ne 1 2\ne 0 1\n")
        assert a.edges == ((1, 2), (0, 1))

    def test_vertex_out_of_range(self):
        with pytest.raises(FormatError) as err:
            parse_fg("fg 1\nv 3\ns 0\nt 2\ne 0 9\n")
        assert err.value.line == 5

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "fg 2\nv 1\ns 0\nt 0\n",
            "fg 1\ns 0\nv 1\nt 0\n",
            "fg 1\nv 0\ns 0\nt 0\n",
            "fg 1\nv 2\ns 0\nt 5\n",
            "fg 1\nv 2\ns 0\nt 1\ne 0\n",
            "fg 1\nv 2\ns 0\nt 1\ne 0 x\n",
            "fg 1\nv 2\ns 0\nt 1\n",  # disconnected
        ],
    )
    def test_malformed(self, text):
        with pytest.raises(FormatError):
            parse_fg(text)


class TestWrite:
    def test_trivial(self):
        assert write_fg(F0) == "fg 1\nv 1\ns 0\nt 0\n"

    def test_sorted_edges(self):
        a = parse_fg("fg 1\nv 3\ns 0\nt 2\ne 1 2\ne 0 1\n")
        assert write_fg(a).splitlines()[4:] == ["e 0 1", "e 1 2"]

    @given(flow_graphs())
    def test_round_trip(self, a):
        b = parse_fg(write_fg(a))
        assert write_fg(b) == write_fg(a)
        assert sorted(b.edges) == sorted(a.edges) and (b.source, b.target) == (a.source, a.target)
        assert isomorphic(a, b)

    def test_files(self, tmp_path):
        path = tmp_path / "c.fg"
        save_fg(C1, path)
        assert path.read_bytes() == b"fg 1\nv 1\ns 0\nt 0\ne 0 0\n"
        assert read_fg(path) == C1


class TestDot:
    def test_labels(self):
        dot = to_dot(F1)
        assert '0 [label="s"]' in dot and '1 [label="t"]' in dot and "0 -> 1" in dot

    def test_shared_anchor(self):
        assert 'label="s=t"' in to_dot(C1)
