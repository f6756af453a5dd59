"""Run laws over enumerated universes and report the outcome."""

from __future__ import annotations

import enum
import json
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from ..core import FlowGraph
from ..errors import UnknownLaw
from ..fgio import parse_fg, write_fg
from .enumerate import UniverseSpec, universe
from .laws import CATALOG, Context, Law, shell_order


class Verdict(str, enum.Enum):
    HOLDS = "Holds"
    COUNTEREXAMPLE_FOUND = "CounterexampleFound"
    EXPECTED_FAILURE_CONFIRMED = "ExpectedFailureConfirmed"
    # an expected failure whose search came up empty inside the universe
    NO_COUNTEREXAMPLE_FOUND = "NoCounterexampleFound"


@dataclass
class LawReport:
    law_id: str
    universe: str
    instances: int
    verdict: Verdict
    counterexample: tuple[str, ...] | None = None
    named_instance: tuple[str, ...] | None = None
    named_confirmed: bool | None = None
    reverified: bool | None = None
    elapsed: float = 0.0
    expect: str = "holds"
    note: str = ""

    @property
    def as_expected(self) -> bool:
        if self.expect == "holds":
            return self.verdict is Verdict.HOLDS
        return self.verdict is Verdict.EXPECTED_FAILURE_CONFIRMED

    def to_line(self, timing: bool = True) -> str:
        parts = [
            f"{self.law_id}",
            f"verdict={self.verdict.value}",
            f"expect={self.expect}",
            f"instances={self.instances}",
            f"universe={self.universe}",
        ]
        if self.counterexample is not None:
            parts.append(f"reverified={self.reverified}")
        if self.named_confirmed is not None:
            parts.append(f"named_instance_confirmed={self.named_confirmed}")
        if timing:
            parts.append(f"elapsed={self.elapsed:.2f}s")
        return " ".join(parts)

    def to_text(self, timing: bool = True) -> str:
        lines = [self.to_line(timing)]
        if self.counterexample is not None:
            for i, text in enumerate(self.counterexample):
                lines.append(f"  counterexample[{i}]: " + text.strip().replace("\n", "; "))
        if self.named_instance is not None:
            for i, text in enumerate(self.named_instance):
                lines.append(f"  named[{i}]: " + text.strip().replace("\n", "; "))
        if self.note:
            lines.append(f"  note: {self.note}")
        return "\n".join(lines)

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "law_id": self.law_id,
            "universe": self.universe,
            "instances": self.instances,
            "verdict": self.verdict.value,
            "expect": self.expect,
            "counterexample": list(self.counterexample) if self.counterexample is not None else None,
            "reverified": self.reverified,
            "named_instance": list(self.named_instance) if self.named_instance is not None else None,
            "named_confirmed": self.named_confirmed,
            "elapsed": round(self.elapsed, 3),
            "note": self.note,
        }
        if not timing:
            del out["elapsed"]
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=None)


def get_law(law_id: str) -> Law:
    try:
        return CATALOG[law_id]
    except KeyError:
        raise UnknownLaw(law_id) from None


def _violation(law: Law, ctx: Context, pools) -> tuple[int, tuple[FlowGraph, ...] | None]:
    if law.tuples is not None:
        stream = law.tuples(pools, ctx)
    else:
        stream = (tuple(p[i] for p, i in zip(pools, idx)) for idx in shell_order(pools))
    count = 0
    for tup in stream:
        count += 1
        if not law.holds(ctx, *tup):
            return count, tup
    return count, None


def reverify(law: Law, serialized: Sequence[str]) -> bool:
    """Parse the stored tuple again and confirm it still violates the law with fresh state."""
    graphs = [parse_fg(text) for text in serialized]
    return not law.holds(Context(), *graphs)


def _describe(law: Law, override: UniverseSpec | None) -> str:
    if law.pools is not None:
        return "custom:" + law.id
    specs = law.specs(override)
    if len(set(specs)) == 1:
        return specs[0].describe()
    return " x ".join(s.describe() for s in specs)


def check_law(law_id: str, spec: UniverseSpec | None = None) -> LawReport:
    law = get_law(law_id)
    start = time.perf_counter()
    pools = law.build_pools(spec)
    ctx = Context()
    count, bad = _violation(law, ctx, pools)
    report = LawReport(
        law_id=law.id,
        universe=_describe(law, spec),
        instances=count,
        verdict=Verdict.HOLDS,
        expect=law.expect,
        note=law.note,
    )
    if bad is not None:
        report.counterexample = tuple(write_fg(x) for x in bad)
        report.reverified = reverify(law, report.counterexample)
    if law.named is not None:
        named = law.named()
        report.named_instance = tuple(write_fg(x) for x in named)
        report.named_confirmed = reverify(law, report.named_instance)
    if law.expect == "holds":
        report.verdict = Verdict.HOLDS if bad is None else Verdict.COUNTEREXAMPLE_FOUND
    else:
        found = bad is not None and report.reverified
        named_ok = report.named_confirmed is not False
        if found and named_ok:
            report.verdict = Verdict.EXPECTED_FAILURE_CONFIRMED
        elif bad is None and report.named_confirmed:
            # the paper's instance fails the law even though it lies outside the universe
            report.verdict = Verdict.EXPECTED_FAILURE_CONFIRMED
            report.counterexample = report.named_instance
            report.reverified = True
        else:
            report.verdict = Verdict.NO_COUNTEREXAMPLE_FOUND
    report.elapsed = time.perf_counter() - start
    return report


def find_counterexample(
    predicate: Callable[..., bool], arity: int, spec: UniverseSpec
) -> tuple[FlowGraph, ...] | None:
    """First tuple (smallest graphs first) on which ``predicate`` is False, re-checked from its serialization."""
    if arity not in (1, 2, 3):
        raise ValueError("arity must be 1, 2 or 3")
    pool = universe(spec)
    for idx in shell_order([pool] * arity):
        tup = tuple(pool[i] for i in idx)
        if not predicate(*tup):
            again = tuple(parse_fg(write_fg(x)) for x in tup)
            if predicate(*again):
                raise AssertionError("counterexample did not survive a serialization round trip")
            return tup
    return None


def run_catalog(
    law_ids: Iterable[str] | None = None, spec: UniverseSpec | None = None, jobs: int = 1
) -> list[LawReport]:
    """Check several laws; with ``jobs > 1`` laws run in worker processes, reports keep catalog order."""
    ids = list(law_ids) if law_ids is not None else list(CATALOG)
    for i in ids:
        get_law(i)
    if jobs <= 1 or len(ids) <= 1:
        return [check_law(i, spec) for i in ids]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(check_law, ids, [spec] * len(ids)))
