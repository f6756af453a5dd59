#!/usr/bin/env python3
"""Run the law catalog and write one JSON line per law.

    python3 scripts/run_law_suite.py --out laws.jsonl
    python3 scripts/run_law_suite.py --law oplus_assoc --law otimes_assoc --timing
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from pathlib import Path

from fga.explorer import CATALOG, run_catalog
from fga.explorer.enumerate import UniverseSpec


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--law", action="append", help="law id (repeatable); default: every law")
    p.add_argument("--skip", action="append", default=[], help="law id to leave out (repeatable)")
    p.add_argument("--max-edges", type=int, help="override every law's universe")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="print elapsed seconds per law")
    p.add_argument("--out", type=Path, help="JSON lines output file")
    args = p.parse_args(argv)

    ids = [i for i in (args.law or list(CATALOG)) if i not in args.skip]
    spec = None if args.max_edges is None else UniverseSpec(max_edges=args.max_edges)
    lines = []
    # one law at a time so progress shows up while long laws run
    for i in ids:
        (r,) = run_catalog([i], spec)
        print(r.to_text(args.timing), flush=True)
        lines.append(r)
    if args.out:
        args.out.write_text("".join(r.to_json(args.timing) + "\n" for r in lines))
    tally = Counter(r.verdict.value for r in lines)
    unexpected = [r.law_id for r in lines if not r.as_expected]
    print("summary: " + ", ".join(f"{k}={v}" for k, v in sorted(tally.items())), file=sys.stderr)
    if unexpected:
        print("not as expected: " + " ".join(unexpected), file=sys.stderr)
    return 1 if unexpected else 0


if __name__ == "__main__":
    sys.exit(main())
