"""Maximal-clique enumeration: the chordal specialisation and a capped general enumerator."""

from __future__ import annotations

from dataclasses import dataclass, field

from core.errors import PerfectOrderError
from core.graph import Graph, VertexSet, bits, members
from recognizers.chordal import EliminationOrder


@dataclass(frozen=True, slots=True)
class CliqueFamily:
    """Maximal cliques in canonical order plus their pairwise intersection table.

    Canonical order sorts cliques by their ascending member lists, which puts the
    clique with the smallest minimum member first.
    """

    cliques: tuple[VertexSet, ...]
    intersections: tuple[tuple[VertexSet, ...], ...] = field(repr=False)

    @classmethod
    def build(cls, cliques) -> CliqueFamily:
        ordered = tuple(sorted(set(cliques), key=members))
        table = tuple(tuple(a & b for b in ordered) for a in ordered)
        return cls(ordered, table)

    def __len__(self) -> int:
        return len(self.cliques)

    def __getitem__(self, index: int) -> VertexSet:
        return self.cliques[index]

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(bits(c)) for c in self.cliques}


@dataclass(frozen=True, slots=True)
class CliqueOverflow:
    """More than ``cap`` maximal cliques exist; ``found`` is how many were seen before stopping."""

    cap: int
    found: int


def maximal_cliques_chordal(G: Graph, order: EliminationOrder) -> CliqueFamily:
    """Maximal cliques from a perfect elimination order.

    Every maximal clique is {v} plus the later neighbours of v for some v, so
    there are at most n of them.
    """
    if not order.perfect:
        raise PerfectOrderError(f"order fails at vertex {order.failed_at}")
    later = order.later_neighbors(G)
    candidates = sorted({later[v] | 1 << v for v in range(G.n)}, key=int.bit_count, reverse=True)
    maximal: list[int] = []
    for cand in candidates:
        if not any(cand & ~big == 0 for big in maximal):
            maximal.append(cand)
    return CliqueFamily.build(maximal)


class _CapReached(Exception):
    pass


def maximal_cliques_capped(G: Graph, cap: int) -> CliqueFamily | CliqueOverflow:
    """Pivoted Bron-Kerbosch; stops as soon as more than ``cap`` cliques are found."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    if G.n == 0:
        return CliqueFamily.build([])
    rows = G.rows
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            if len(found) > cap:
                raise _CapReached
            return
        pivot = max(bits(p | x), key=lambda u: (rows[u] & p).bit_count())
        for v in bits(p & ~rows[pivot]):
            expand(r | 1 << v, p & rows[v], x & rows[v])
            p &= ~(1 << v)
            x |= 1 << v

    try:
        expand(0, G.vertices, 0)
    except _CapReached:
        return CliqueOverflow(cap=cap, found=len(found))
    return CliqueFamily.build(found)
