#!/usr/bin/env python3
"""Are right and left quotients unique up to isomorphism?

For every C and B in small universes, form A = C * B (or B * C) and collect
every quotient of A by B. Prints each A/B with more than one quotient class.
"""

from __future__ import annotations

import argparse
import sys

from fga import algebra as alg
from fga.core import canonical_key
from fga.explorer.enumerate import UniverseSpec, universe
from fga.fgio import write_fg


def _flat(g) -> str:
    return write_fg(g).strip().replace("\n", "; ")


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--quotient-edges", type=int, default=2, help="edge bound for C")
    p.add_argument("--divisor-edges", type=int, default=2, help="edge bound for B")
    p.add_argument("--left", action="store_true", help="study B \\ A instead of A / B")
    args = p.parse_args(argv)

    cs = [c for c in universe(UniverseSpec(max_edges=args.quotient_edges)) if c.q]
    bs = [b for b in universe(UniverseSpec(max_edges=args.divisor_edges)) if b.q]
    seen: set[tuple[bytes, bytes]] = set()
    pairs = ambiguous = 0
    for b in bs:
        for c in cs:
            a = alg.times(b, c) if args.left else alg.times(c, b)
            tag = (canonical_key(a), canonical_key(b))
            if tag in seen:
                continue
            seen.add(tag)
            pairs += 1
            qs = alg.left_quotients(a, b) if args.left else alg.right_quotients(a, b)
            if len(qs) > 1:
                ambiguous += 1
                side = "B\\A" if args.left else "A/B"
                print(f"{side} with A = {_flat(a)} and B = {_flat(b)}: {len(qs)} classes")
                for q in qs:
                    print(f"    {_flat(q)}")
    print(f"{ambiguous} of {pairs} distinct (A, B) pairs have more than one quotient class")
    return 0


if __name__ == "__main__":
    sys.exit(main())
