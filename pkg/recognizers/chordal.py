"""Chordality via maximum-cardinality search plus the standard perfection check."""

from __future__ import annotations

from dataclasses import dataclass

from core.graph import Graph, bits


@dataclass(frozen=True, slots=True)
class EliminationOrder:
    """A vertex permutation; ``perfect`` says whether it certifies chordality.

    When the order is not perfect, ``failed_at`` is the vertex whose later
    neighbours are not covered by its parent's neighbourhood.
    """

    order: tuple[int, ...]
    perfect: bool
    failed_at: int | None = None

    def later_neighbors(self, G: Graph) -> list[int]:
        """Row of later neighbours for each vertex, indexed by vertex."""
        later = [0] * G.n
        remaining = G.vertices
        for v in self.order:
            remaining &= ~(1 << v)
            later[v] = G.rows[v] & remaining
        return later


def mcs_order(G: Graph) -> tuple[int, ...]:
    """Maximum-cardinality search; returns the reverse of the visiting order.

    Ties go to the lowest-indexed vertex.
    """
    weight = [0] * G.n
    unnumbered = G.vertices
    visited = []
    for _ in range(G.n):
        best = -1
        for v in bits(unnumbered):
            if best < 0 or weight[v] > weight[best]:
                best = v
        visited.append(best)
        unnumbered &= ~(1 << best)
        for u in bits(G.rows[best] & unnumbered):
            weight[u] += 1
    return tuple(reversed(visited))


def chordal_order(G: Graph) -> EliminationOrder:
    order = mcs_order(G)
    pos = [0] * G.n
    for i, v in enumerate(order):
        pos[v] = i
    remaining = G.vertices
    for v in order:
        remaining &= ~(1 << v)
        later = G.rows[v] & remaining
        if not later:
            continue
        parent = min(bits(later), key=pos.__getitem__)
        if later & ~(1 << parent) & ~G.rows[parent]:
            return EliminationOrder(order, perfect=False, failed_at=v)
    return EliminationOrder(order, perfect=True)


def is_chordal(G: Graph) -> bool:
    return chordal_order(G).perfect
