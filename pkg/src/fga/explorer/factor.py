"""Prime factorizations under the product, found by recursive right division."""

from __future__ import annotations

from ..algebra import _graphs_with_edges, is_prime, right_quotients
from ..config import Budget, default_budget
from ..core import FlowGraph, canonical_key
from ..errors import DomainError


def _proper_sizes(q: int) -> list[int]:
    # sizes of a right factor when both factors keep at least two edges
    return [d for d in range(2, q // 2 + 1) if q % d == 0]


def factorization_experiment(a: FlowGraph, budget: Budget | None = None) -> list[tuple[FlowGraph, ...]]:
    """All sequences of primes P1..Pk with at least two edges each and P1 * ... * Pk isomorphic to ``a``.

    One-edge factors are left out: the units would pad every sequence and the
    other one-edge graphs are idempotent (P * P is P), so neither yields a
    finite list. Sequences are unique up to per-position isomorphism and are
    listed in ascending order of their canonical keys.
    """
    budget = budget or default_budget()
    if a.q == 0:
        raise DomainError("the trivial flow graph has no factorization")
    memo: dict[bytes, list[tuple[FlowGraph, ...]]] = {}
    prime_memo: dict[bytes, bool] = {}

    def prime(g: FlowGraph, key: bytes) -> bool:
        if key not in prime_memo:
            prime_memo[key] = is_prime(g, budget)
        return prime_memo[key]

    def solve(g: FlowGraph) -> list[tuple[FlowGraph, ...]]:
        key = canonical_key(g, budget)
        if key in memo:
            return memo[key]
        out: dict[tuple[bytes, ...], tuple[FlowGraph, ...]] = {}
        if g.q >= 2 and prime(g, key):
            out[(key,)] = (g,)
        for d in _proper_sizes(g.q):
            for b in _graphs_with_edges(d):
                quotients = right_quotients(g, b, budget)
                if not quotients or not prime(b, canonical_key(b, budget)):
                    continue
                kb = canonical_key(b, budget)
                for c in quotients:
                    for seq in solve(c):
                        keys = tuple(canonical_key(x, budget) for x in seq) + (kb,)
                        out.setdefault(keys, seq + (b,))
        memo[key] = [out[k] for k in sorted(out)]
        return memo[key]

    return solve(a)
