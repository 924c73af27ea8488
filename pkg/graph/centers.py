"""Forced edges and centre placement for the ptolemaic square-root construction.

Every gem-triple (A, B, C) of G forces the root edges between A∩C and
(A∪C)∩B. Every maximal clique C of G is the closed root neighbourhood of some
centre x_C; the candidates for x_C are the vertices lying in every clique that
meets C without a gem-triple from C to it, and in none of the cliques reached by
a gem-triple from C.
"""

from collections import defaultdict

from cliques.family import CliqueFamily
from cliques.triples import GemTriple
from core.graph import Graph, bits
from graph.models import CenterPlan


def forced_edge_rows(n: int, F: CliqueFamily, triples: list[GemTriple]) -> list[int]:
    """Adjacency rows of the forced edges.

    Accumulates X_{A,C} = ∪ (A∩B) ∪ (B∩C) over the triples sharing the outer
    pair, then joins A∩C to X_{A,C}.
    """
    meet = F.intersections
    partners: dict[tuple[int, int], int] = defaultdict(int)
    for a, b, c in triples:
        partners[a, c] |= meet[a][b] | meet[b][c]
    rows = [0] * n
    for (a, c), x in partners.items():
        for u in bits(meet[a][c]):
            rows[u] |= x & ~(1 << u)
    for v in range(n):
        for u in bits(rows[v]):
            rows[u] |= 1 << v
    return rows


def forced_edges(G: Graph, F: CliqueFamily, triples: list[GemTriple]) -> frozenset[tuple[int, int]]:
    return frozenset(Graph(G.n, forced_edge_rows(G.n, F, triples)).edges())


def candidate_centers(G: Graph, F: CliqueFamily, triples: list[GemTriple]) -> CenterPlan:
    k = len(F)
    reached = [0] * k  # bitmask over clique indices: C'_A
    for a, _, c in triples:
        reached[a] |= 1 << c
    candidates = []
    for a in range(k):
        meeting = 0  # C_A, includes A itself
        for c in range(k):
            if F.intersections[a][c]:
                meeting |= 1 << c
        kept = meeting & ~reached[a]  # C''_A
        inside = G.vertices
        for c in bits(kept):
            inside &= F.cliques[c]
        outside = 0
        for c in bits(reached[a]):
            outside |= F.cliques[c]
        candidates.append(inside & ~outside)
    return CenterPlan(candidates=tuple(candidates), groups=_group_identical(candidates))


def _group_identical(candidates: list[int]) -> tuple[tuple[int, ...], ...]:
    groups: dict[int, list[int]] = {}
    for index, x in enumerate(candidates):
        groups.setdefault(x, []).append(index)
    return tuple(tuple(g) for g in groups.values())


def assign_centers(plan: CenterPlan) -> CenterPlan | None:
    """Injective centre choice, or None when some group has fewer candidates than cliques.

    Within a group the lowest-indexed unused candidates go to the cliques in
    canonical order.
    """
    used = 0
    assignment: dict[int, int] = {}
    for group in plan.groups:
        free = plan.candidates[group[0]] & ~used
        if free.bit_count() < len(group):
            return None
        for clique, centre in zip(group, bits(free)):
            assignment[clique] = centre
            used |= 1 << centre
    return plan.model_copy(update={"assignment": dict(sorted(assignment.items()))})


def center_edge_rows(rows: list[int], F: CliqueFamily, assignment: dict[int, int]) -> list[int]:
    """Join every centre x_C to the rest of its clique C, on top of the given rows."""
    rows = list(rows)
    for clique, centre in assignment.items():
        spokes = F.cliques[clique] & ~(1 << centre)
        rows[centre] |= spokes
        for v in bits(spokes):
            rows[v] |= 1 << centre
    return rows
