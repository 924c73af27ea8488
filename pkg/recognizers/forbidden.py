"""Detectors for small induced patterns, each returning the lexicographically least witness."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from enum import Enum

from core.graph import Graph, bits, distances_from, square


class PatternId(str, Enum):
    GEM = "gem"
    C4 = "C4"
    THREE_SUN = "3-sun"
    G1 = "G1"
    G2 = "G2"
    G3 = "G3"
    G4 = "G4"
    PSEUDO_P5_FAILURE = "pseudo-P5-failure"


PATTERN_SIZES = {
    PatternId.GEM: 5,
    PatternId.C4: 4,
    PatternId.THREE_SUN: 6,
    PatternId.G1: 6,
    PatternId.G2: 6,
    PatternId.G3: 6,
    PatternId.G4: 6,
    PatternId.PSEUDO_P5_FAILURE: 5,
}

# Number of edges among the three outer vertices selects G1..G4.
_HELLY_BY_OUTER_EDGES = (PatternId.G1, PatternId.G2, PatternId.G3, PatternId.G4)


@dataclass(frozen=True)
class ForbiddenPattern:
    """A pattern id plus its witness vertices in the pattern's canonical labelling.

    gem: (v1, v2, v3, v4, v5) with induced P4 v1-v2-v4-v5 and apex v3.
    C4: (u, x, w, y) around the cycle.
    3-sun and G1..G4: (a, b, c, x, y, z) with triangle a,b,c and
        x ~ b,c / y ~ c,a / z ~ a,b for the Helly obstructions, or
        (v1, v2, v3, u1, u2, u3) with ui ~ vi, vi+1 for the 3-sun.
    pseudo-P5-failure: an induced gem of H^2, labelled as above, that is not a pseudo-P5 of H.
    """

    pattern: PatternId
    witness: tuple[int, ...]

    def __post_init__(self):
        if len(self.witness) != PATTERN_SIZES[self.pattern]:
            raise ValueError(f"{self.pattern.value} witness needs {PATTERN_SIZES[self.pattern]} vertices")


# ── Gem ─────────────────────────────────────────────────────────────────
def iter_gems(G: Graph) -> Iterator[tuple[int, int, int, int, int]]:
    """All induced gems as (v1, v2, v3, v4, v5) in lexicographic order."""
    rows = G.rows
    for v1 in range(G.n):
        closed1 = rows[v1] | 1 << v1
        for v2 in bits(rows[v1]):
            for v3 in bits(rows[v1] & rows[v2]):
                for v4 in bits(rows[v2] & rows[v3] & ~closed1):
                    far = ~(closed1 | rows[v2])
                    for v5 in bits(rows[v4] & rows[v3] & far):
                        yield (v1, v2, v3, v4, v5)


def find_gem(G: Graph) -> ForbiddenPattern | None:
    witness = next(iter_gems(G), None)
    return None if witness is None else ForbiddenPattern(PatternId.GEM, witness)


# ── C4 ──────────────────────────────────────────────────────────────────
def find_c4(G: Graph) -> ForbiddenPattern | None:
    rows = G.rows
    for u in range(G.n):
        for x in bits(rows[u]):
            for w in bits(rows[x] & ~rows[u] & ~(1 << u)):
                for y in bits(rows[u] & rows[w] & ~rows[x] & ~(1 << x)):
                    return ForbiddenPattern(PatternId.C4, (u, x, w, y))
    return None


# ── Pseudo-P5 ───────────────────────────────────────────────────────────
def is_pseudo_p5(H: Graph, t: Sequence[int]) -> bool:
    """Evaluate the four distance conditions of a pseudo-P5 on the ordered tuple t."""
    if len(t) != 5:
        raise ValueError("a pseudo-P5 candidate has exactly 5 vertices")
    if any(not 0 <= v < H.n for v in t):
        raise ValueError(f"vertex index out of range for n={H.n}: {tuple(t)}")
    if len(set(t)) != 5:
        raise ValueError(f"repeated vertex in {tuple(t)}")
    v1, v2, v3, v4, v5 = t
    if not (H.has_edge(v2, v3) and H.has_edge(v3, v4)):
        return False
    d1, d2, d3, d4 = (distances_from(H, v) for v in (v1, v2, v3, v4))
    if d1[v2] > 2 or d4[v5] > 2:
        return False
    if not (d1[v3] == d2[v4] == d3[v5] == 2):
        return False
    return d1[v4] >= 3 and d1[v5] >= 3 and d2[v5] >= 3


def find_unlifted_gem(H: Graph) -> ForbiddenPattern | None:
    """First induced gem of H^2 whose labelling is not a pseudo-P5 of H."""
    for witness in iter_gems(square(H)):
        if not is_pseudo_p5(H, witness):
            return ForbiddenPattern(PatternId.PSEUDO_P5_FAILURE, witness)
    return None


# ── 3-sun ───────────────────────────────────────────────────────────────
def _triangles(G: Graph) -> Iterator[tuple[int, int, int]]:
    rows = G.rows
    for a in range(G.n):
        for b in bits(rows[a] >> (a + 1) << (a + 1)):
            for c in bits(rows[a] & rows[b] >> (b + 1) << (b + 1)):
                yield a, b, c


def find_3sun(G: Graph) -> ForbiddenPattern | None:
    rows = G.rows
    for v1, v2, v3 in _triangles(G):
        # ui sees vi and vi+1 but not the third triangle vertex
        s1 = rows[v1] & rows[v2] & ~rows[v3] & ~(1 << v3)
        s2 = rows[v2] & rows[v3] & ~rows[v1] & ~(1 << v1)
        s3 = rows[v3] & rows[v1] & ~rows[v2] & ~(1 << v2)
        if not (s1 and s2 and s3):
            continue
        for u1 in bits(s1):
            for u2 in bits(s2 & ~rows[u1]):
                for u3 in bits(s3 & ~rows[u1] & ~rows[u2]):
                    return ForbiddenPattern(PatternId.THREE_SUN, (v1, v2, v3, u1, u2, u3))
    return None


# ── Hereditary clique-Helly ─────────────────────────────────────────────
def is_hereditary_clique_helly(G: Graph) -> tuple[bool, ForbiddenPattern | None]:
    """Triangle test for G1..G4.

    For a triangle a,b,c let A' be the vertices adjacent to b and c but not a,
    and B', C' likewise. G contains some Gi iff some triangle has all three
    sets non-empty; any choice x, y, z from them induces a Gi with a,b,c.
    """
    rows = G.rows
    for a, b, c in _triangles(G):
        a_side = rows[b] & rows[c] & ~rows[a] & ~(1 << a)
        if not a_side:
            continue
        b_side = rows[a] & rows[c] & ~rows[b] & ~(1 << b)
        c_side = rows[a] & rows[b] & ~rows[c] & ~(1 << c)
        if not (b_side and c_side):
            continue
        x, y, z = (next(bits(s)) for s in (a_side, b_side, c_side))
        outer = G.has_edge(x, y) + G.has_edge(y, z) + G.has_edge(x, z)
        return False, ForbiddenPattern(_HELLY_BY_OUTER_EDGES[outer], (a, b, c, x, y, z))
    return True, None
