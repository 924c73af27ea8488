"""Membership tests for split, distance-hereditary, ptolemaic, tree and block graphs."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from core.graph import Graph, VertexSet, bits, is_connected
from recognizers.chordal import is_chordal


@dataclass(frozen=True, slots=True)
class SplitPartition:
    clique: VertexSet
    independent: VertexSet


def is_split(G: Graph) -> tuple[bool, SplitPartition | None]:
    """Degree-sequence split test.

    With degrees sorted non-increasingly and k the largest i with d_i >= i-1,
    G is split iff sum(d_1..d_k) == k(k-1) + sum(d_k+1..d_n); the k
    highest-degree vertices then form the clique.
    """
    ranked = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    degrees = [G.degree(v) for v in ranked]
    k = 0
    for i, d in enumerate(degrees, start=1):
        if d >= i - 1:
            k = i
    if sum(degrees[:k]) != k * (k - 1) + sum(degrees[k:]):
        return False, None
    clique = 0
    for v in ranked[:k]:
        clique |= 1 << v
    partition = SplitPartition(clique=clique, independent=G.vertices & ~clique)
    return True, partition


def _removable_vertex(G: Graph, alive: VertexSet) -> int | None:
    """Lowest-indexed alive vertex that is pendant or has a (true or false) twin."""
    open_groups: dict[int, list[int]] = defaultdict(list)
    closed_groups: dict[int, list[int]] = defaultdict(list)
    for v in bits(alive):
        row = G.rows[v] & alive
        open_groups[row].append(v)
        closed_groups[row | 1 << v].append(v)
    for v in bits(alive):
        row = G.rows[v] & alive
        if row.bit_count() == 1:
            return v
        if len(open_groups[row]) > 1 or len(closed_groups[row | 1 << v]) > 1:
            return v
    return None


def pruning_sequence(G: Graph) -> list[int] | None:
    """Vertices removed by pendant/twin pruning, or None when pruning gets stuck."""
    alive = G.vertices
    removed = []
    while alive.bit_count() > 1:
        v = _removable_vertex(G, alive)
        if v is None:
            return None
        removed.append(v)
        alive &= ~(1 << v)
    return removed


def is_distance_hereditary(G: Graph) -> bool:
    return pruning_sequence(G) is not None


def is_ptolemaic(G: Graph) -> bool:
    """Connected, chordal and distance-hereditary. K0 is not ptolemaic; K1 is."""
    if G.n == 0:
        return False
    return is_connected(G) and is_chordal(G) and is_distance_hereditary(G)


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.m == G.n - 1 and is_connected(G)


def is_block_graph(G: Graph) -> bool:
    """Connected, chordal and diamond-free (common neighbours of every edge form a clique)."""
    if G.n == 0 or not is_connected(G) or not is_chordal(G):
        return False
    for u, v in G.edges():
        if not G.is_clique(G.rows[u] & G.rows[v]):
            return False
    return True
