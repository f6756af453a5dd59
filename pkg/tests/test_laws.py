from __future__ import annotations

import itertools
import json

import pytest

from conftest import C1
from fga import algebra as alg
from fga.core import isomorphic
from fga.errors import UnknownLaw
from fga.explorer.enumerate import UniverseSpec
from fga.explorer.harness import (
    LawReport,
    Verdict,
    check_law,
    find_counterexample,
    get_law,
    reverify,
    run_catalog,
)
from fga.explorer.laws import CATALOG, Law, shell_order
from fga.fgio import parse_fg

REQUIRED = """
oplus_assoc oplus_comm oplus_identity oplus_count_formulas otimes_assoc otimes_comm otimes_identity otimes_zero
otimes_count_formulas eta_independence right_distrib left_distrib right_div_distrib div_chain_rules st_closure
st_closure_reverse core_distributes crossing_summands crossing_summands_general componentwise_iso decomp_recompose
decomp_for_sums decomp_for_sums_general rank_total rank_unique split_edge_to_F1 prod_decomp_length
prod_irreducibility cancel_left cancel_right cancel_left_general comm_condition comm_condition_general
strong_implies_weak strong_transitive strong_antisym weak_transitive weak_antisym strong_preserve_right_mul
strong_violation_plus weak_preserve_all weak_violation_left_mul nat_submodel prime_nat_agreement
left_right_prime_agree infinitesimal_product_law scalar_comm_reduction
""".split()

TINY = UniverseSpec(max_edges=1)


class TestCatalog:
    def test_required_laws_present(self):
        assert set(REQUIRED) <= set(CATALOG)

    def test_well_formed(self):
        for lid, law in CATALOG.items():
            assert law.id == lid and law.expect in ("holds", "fails") and 1 <= law.arity <= 3
            assert len(law.specs()) == law.arity

    def test_unknown(self):
        with pytest.raises(UnknownLaw):
            get_law("no_such_law")
        with pytest.raises(UnknownLaw):
            run_catalog(["oplus_assoc", "no_such_law"])


class TestShellOrder:
    def test_each_tuple_once(self):
        pools = [list(range(3)), list(range(4))]
        got = list(shell_order(pools))
        assert sorted(got) == sorted(itertools.product(range(3), range(4)))

    def test_small_first(self):
        got = list(shell_order([list(range(5))] * 2))
        assert [max(t) for t in got] == sorted(max(t) for t in got)


class TestVerdicts:
    def test_holds(self):
        r = check_law("oplus_assoc", UniverseSpec(max_edges=2))
        assert r.verdict is Verdict.HOLDS and r.as_expected and r.counterexample is None
        assert r.instances == 40**3

    def test_expected_failure(self):
        r = check_law("oplus_comm")
        assert r.verdict is Verdict.EXPECTED_FAILURE_CONFIRMED and r.reverified and r.named_confirmed
        a, b = (parse_fg(x) for x in r.counterexample)
        assert not isomorphic(alg.plus(a, b), alg.plus(b, a))

    def test_counterexample_for_holding_law(self, monkeypatch):
        law = Law("fake_comm", 2, "A+B == B+A", lambda ctx, a, b: isomorphic(alg.plus(a, b), alg.plus(b, a)), universe=TINY)
        monkeypatch.setitem(CATALOG, law.id, law)
        r = check_law(law.id)
        assert r.verdict is Verdict.COUNTEREXAMPLE_FOUND and not r.as_expected and r.reverified

    def test_expected_failure_not_found(self, monkeypatch):
        law = Law("fake_assoc", 1, "always true", lambda ctx, a: True, "fails", TINY)
        monkeypatch.setitem(CATALOG, law.id, law)
        r = check_law(law.id)
        assert r.verdict is Verdict.NO_COUNTEREXAMPLE_FOUND and r.instances == 6
        assert "NoCounterexampleFound" in r.to_line()

    def test_named_instance_outside_universe(self, monkeypatch):
        law = Law(
            "fake_named", 1, "not a loop", lambda ctx, a: not isomorphic(a, alg.times(C1, C1)), "fails",
            UniverseSpec(max_edges=0), named=lambda: (C1,),
        )
        monkeypatch.setitem(CATALOG, law.id, law)
        r = check_law(law.id)
        assert r.verdict is Verdict.EXPECTED_FAILURE_CONFIRMED and r.counterexample == r.named_instance

    def test_reverify_uses_fresh_state(self):
        law = get_law("oplus_comm")
        r = check_law("oplus_comm")
        assert reverify(law, r.counterexample)
        assert not reverify(law, (r.counterexample[0], r.counterexample[0]))


class TestReportFormats:
    def test_json_round_trip(self):
        r = check_law("oplus_comm")
        d = json.loads(r.to_json())
        assert d["law_id"] == "oplus_comm" and d["verdict"] == "ExpectedFailureConfirmed"
        assert [parse_fg(x) for x in d["counterexample"]] == [parse_fg(x) for x in r.counterexample]

    def test_text(self):
        text = check_law("oplus_comm").to_text()
        first, *rest = text.splitlines()
        assert first.startswith("oplus_comm verdict=ExpectedFailureConfirmed")
        assert any(line.startswith("  counterexample[0]: fg 1;") for line in rest)

    def test_line_without_counterexample(self):
        r = LawReport("x", "u", 3, Verdict.HOLDS)
        assert r.to_line() == "x verdict=Holds expect=holds instances=3 universe=u elapsed=0.00s"


class TestRunCatalog:
    def test_order_kept_with_workers(self):
        ids = ["oplus_comm", "otimes_comm", "left_distrib"]
        reports = run_catalog(ids, jobs=2)
        assert [r.law_id for r in reports] == ids
        assert all(r.as_expected for r in reports)

    def test_override_spec(self):
        (r,) = run_catalog(["decomp_recompose"], spec=UniverseSpec(max_edges=2))
        assert r.instances == 40 and r.universe == "edges<=2,vertices<=3"


class TestFindCounterexample:
    def test_commutativity(self):
        tup = find_counterexample(lambda a, b: isomorphic(alg.plus(a, b), alg.plus(b, a)), 2, UniverseSpec(max_edges=2))
        assert tup is not None
        a, b = tup
        assert not isomorphic(alg.plus(a, b), alg.plus(b, a))

    def test_none_when_law_holds(self):
        assert find_counterexample(lambda a: isomorphic(alg.plus(a, alg.nat(0)), a), 1, UniverseSpec(max_edges=3)) is None

    def test_bad_arity(self):
        with pytest.raises(ValueError):
            find_counterexample(lambda: True, 0, TINY)
