"""Minimum-edge square root by exhaustive search over edge subsets.

Any root of G is an edge-subgraph of G, so scanning the subsets of E(G) by
increasing size (then lexicographically) makes the first hit a minimum root.
Meant for inputs with at most a few dozen edges.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from config import ORACLE_BUDGET
from core.graph import Graph, bits, is_connected
from oracle.predicates import ClassPredicate

logger = logging.getLogger(__name__)


class OracleStatus(str, Enum):
    FOUND = "found"
    NONE = "none"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class OracleResult:
    status: OracleStatus
    root: Graph | None = None
    examined: int = 0

    @property
    def edges(self) -> int | None:
        return None if self.root is None else self.root.m


def _squares_to(rows: list[int], target: tuple[int, ...]) -> bool:
    """True iff the graph with these rows squares to target; exits on the first differing row."""
    for v, row in enumerate(rows):
        reach = row
        for u in bits(row):
            reach |= rows[u]
        if reach & ~(1 << v) != target[v]:
            return False
    return True


def min_root_bruteforce(G: Graph, cls: ClassPredicate, budget: int = ORACLE_BUDGET) -> OracleResult:
    """Cardinality-then-lexicographic scan of edge subsets of G for a root in the class.

    When G is connected, subsets with fewer than n-1 edges cannot be connected
    and are skipped without counting against the budget.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    edges = G.edges()
    start = G.n - 1 if G.n >= 1 and is_connected(G) else 0
    examined = 0
    for k in range(start, len(edges) + 1):
        for subset in combinations(edges, k):
            if examined >= budget:
                logger.info("oracle budget of %d subsets exhausted at size %d", budget, k)
                return OracleResult(OracleStatus.BUDGET_EXCEEDED, examined=examined)
            examined += 1
            rows = [0] * G.n
            for u, v in subset:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            if not _squares_to(rows, G.rows):
                continue
            H = Graph(G.n, rows)
            if cls(H):
                return OracleResult(OracleStatus.FOUND, root=H, examined=examined)
    return OracleResult(OracleStatus.NONE, examined=examined)
