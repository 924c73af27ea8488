"""Graph value type and the basic operations every other package builds on.

Vertices are the integers 0..n-1. A vertex set is an ``int`` bitmask (bit v set
means v is a member), so neighbourhood unions and intersections are single
integer operations.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence

# A vertex set is a bitmask over 0..n-1.
VertexSet = int


def bits(mask: VertexSet) -> Iterator[int]:
    """Yield the members of a vertex set in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: VertexSet) -> tuple[int, ...]:
    return tuple(bits(mask))


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Immutable undirected simple graph stored as adjacency bitmask rows."""

    __slots__ = ("_n", "_rows", "_m")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        degree_sum = 0
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} names a vertex outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric for {u},{v}")
            degree_sum += row.bit_count()
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_rows", tuple(rows))
        object.__setattr__(self, "_m", degree_sum // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # ── Construction ────────────────────────────────────────────────────
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u} {v} outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [0] * n)

    # ── Accessors ───────────────────────────────────────────────────────
    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        """Edge count."""
        return self._m

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def vertices(self) -> VertexSet:
        return (1 << self._n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> VertexSet:
        """Open neighbourhood N(v)."""
        return self._rows[v]

    def closed_neighbors(self, v: int) -> VertexSet:
        """Closed neighbourhood N[v]."""
        return self._rows[v] | 1 << v

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (min, max) pairs in canonical order."""
        return [(u, v) for u in range(self._n) for v in bits(self._rows[u] >> (u + 1) << (u + 1))]

    def is_clique(self, mask: VertexSet) -> bool:
        return all(mask & ~self.closed_neighbors(v) == 0 for v in bits(mask))

    def is_independent(self, mask: VertexSet) -> bool:
        return all(self._rows[v] & mask == 0 for v in bits(mask))

    # ── Dunder ──────────────────────────────────────────────────────────
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __reduce__(self):
        return (Graph, (self._n, self._rows))

    def __copy__(self) -> Graph:
        return self

    def __deepcopy__(self, memo) -> Graph:
        return self

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


# ── Operations ──────────────────────────────────────────────────────────
def square(G: Graph) -> Graph:
    """Join every pair of distinct vertices at distance at most two."""
    rows = []
    for v in range(G.n):
        row = G.rows[v]
        for u in bits(G.rows[v]):
            row |= G.rows[u]
        rows.append(row & ~(1 << v))
    return Graph(G.n, rows)


def distances_from(G: Graph, s: int) -> list[float]:
    """Breadth-first distances from s; unreachable vertices get ``math.inf``."""
    if not 0 <= s < G.n:
        raise ValueError(f"vertex {s} outside 0..{G.n - 1}")
    dist: list[float] = [math.inf] * G.n
    frontier = 1 << s
    seen = frontier
    d = 0
    while frontier:
        reach = 0
        for v in bits(frontier):
            dist[v] = d
            reach |= G.rows[v]
        frontier = reach & ~seen
        seen |= frontier
        d += 1
    return dist


def reachable(G: Graph, s: int) -> VertexSet:
    """Vertex set of the component containing s."""
    frontier = seen = 1 << s
    while frontier:
        reach = 0
        for v in bits(frontier):
            reach |= G.rows[v]
        frontier = reach & ~seen
        seen |= frontier
    return seen


def graphs_equal(G: Graph, H: Graph) -> bool:
    return G == H


def is_connected(G: Graph) -> bool:
    """K0 and K1 count as connected."""
    if G.n <= 1:
        return True
    return reachable(G, 0) == G.vertices


def is_edge_subgraph(R: Graph, G: Graph) -> bool:
    """True iff R and G share a vertex set and every edge of R is an edge of G."""
    return R.n == G.n and all(r & ~g == 0 for r, g in zip(R.rows, G.rows))


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on the given vertices, relabelled 0..k-1 in ascending order."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(vertex_set(index[u] for u in bits(G.rows[v]) if u in index))
    return Graph(len(keep), rows)
