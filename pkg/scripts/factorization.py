#!/usr/bin/env python3
"""List prime factorizations under the product.

With no graph files, factors F_n for n = 2..8. One-edge factors are left
out of the sequences (see ``factorization_experiment``).
"""

from __future__ import annotations

import argparse
import sys

from fga import algebra as alg
from fga.explorer import factorization_experiment
from fga.fgio import read_fg, write_fg


def _flat(g) -> str:
    return write_fg(g).strip().replace("\n", "; ")


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("graphs", nargs="*", help=".fg files")
    p.add_argument("--max-n", type=int, default=8)
    args = p.parse_args(argv)

    targets = [(path, read_fg(path)) for path in args.graphs]
    if not targets:
        targets = [(f"F{n}", alg.nat(n)) for n in range(2, args.max_n + 1)]
    for name, g in targets:
        seqs = factorization_experiment(g)
        print(f"{name}: {len(seqs)} sequence(s)")
        for seq in seqs:
            print("    " + " * ".join(f"[{_flat(x)}]" for x in seq))
    return 0


if __name__ == "__main__":
    sys.exit(main())
