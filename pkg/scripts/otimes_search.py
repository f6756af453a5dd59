#!/usr/bin/env python3
"""Search the open questions about the product on small graphs.

* commuting pairs: A * B == B * A with A, B not isomorphic
* cancellation: A * B == A * C (or B * A == C * A) with B, C not isomorphic

Pairs are bucketed by the canonical key of the product, so every triple
in the universe is covered while only pair products are computed.
"""

from __future__ import annotations

import argparse
import sys
from collections import defaultdict

from fga import algebra as alg
from fga.core import canonical_key, isomorphic
from fga.explorer.enumerate import UniverseSpec, universe
from fga.fgio import write_fg


def _flat(g) -> str:
    return write_fg(g).strip().replace("\n", "; ")


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-edges", type=int, default=2)
    p.add_argument("--show", type=int, default=5, help="examples printed per question")
    args = p.parse_args(argv)
    pool = [g for g in universe(UniverseSpec(max_edges=args.max_edges)) if g.q]

    commuting = []
    for i, a in enumerate(pool):
        for b in pool[i + 1:]:
            if isomorphic(alg.times(a, b), alg.times(b, a)):
                commuting.append((a, b))
    print(f"commuting non-isomorphic pairs: {len(commuting)} of {len(pool) * (len(pool) - 1) // 2}")
    for a, b in commuting[: args.show]:
        print(f"    A = {_flat(a)} | B = {_flat(b)}")

    for side in ("left", "right"):
        hits = []
        for a in pool:
            buckets = defaultdict(list)
            for b in pool:
                prod = alg.times(a, b) if side == "left" else alg.times(b, a)
                buckets[canonical_key(prod)].append(b)
            hits.extend((a, bs) for bs in buckets.values() if len(bs) > 1)
        print(f"{side} cancellation failures (A with two or more non-isomorphic partners): {len(hits)}")
        for a, bs in hits[: args.show]:
            print(f"    A = {_flat(a)} | partners: " + " / ".join(_flat(b) for b in bs))
    return 0


if __name__ == "__main__":
    sys.exit(main())
