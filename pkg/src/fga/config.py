from __future__ import annotations

import os
from dataclasses import dataclass, replace

DEFAULT_NODE_BUDGET = 10**6


def _env_nodes() -> int:
    raw = os.environ.get("FGA_BUDGET_NODES")
    if raw is None:
        return DEFAULT_NODE_BUDGET
    value = int(raw)
    if value <= 0:
        raise ValueError("FGA_BUDGET_NODES must be positive")
    return value


@dataclass(frozen=True)
class Budget:
    """Limits applied to every exhaustive search.

    ``nodes`` bounds the number of search-tree expansions of a single call.
    ``max_vertices``/``max_edges`` bound the size of graphs handed to the
    order deciders; isomorphism and canonical forms are only bounded by
    ``nodes``.
    """

    nodes: int = DEFAULT_NODE_BUDGET
    max_vertices: int = 12
    max_edges: int = 14

    def __post_init__(self):
        if self.nodes <= 0 or self.max_vertices <= 0 or self.max_edges <= 0:
            raise ValueError("budgets must be positive")

    def with_nodes(self, nodes: int) -> Budget:
        return replace(self, nodes=nodes)


def default_budget() -> Budget:
    return Budget(nodes=_env_nodes())


class Counter:
    """Mutable expansion counter that raises once the budget is spent."""

    __slots__ = ("limit", "used", "what")

    def __init__(self, limit: int, what: str = "search"):
        self.limit = limit
        self.used = 0
        self.what = what

    def tick(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            from .errors import SearchBudgetExceeded

            raise SearchBudgetExceeded(
                f"{self.what} exceeded node budget of {self.limit}"
            )
