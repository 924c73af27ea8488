"""Split pipeline nodes: recognise squares of connected 3-sun-free split graphs and build a root.

G is such a square iff it is G1..G4-free (hereditary clique-Helly) and the
intersection C of all its maximal cliques has at least as many vertices as
there are maximal cliques. The root is then the split graph with clique C,
independent set V - C, and an edge v c_i whenever v lies in the i-th maximal
clique, for chosen distinct c_1..c_q in C.
"""

from typing import Any, Dict

from cliques.family import CliqueFamily, CliqueOverflow, maximal_cliques_capped
from core.graph import Graph, VertexSet, bits, square
from graph.models import RejectionStage
from graph.state import RootState, advance
from recognizers.classes import is_split
from recognizers.forbidden import find_3sun, is_hereditary_clique_helly


def universal_clique(F: CliqueFamily, n: int) -> VertexSet:
    """Intersection of all maximal cliques."""
    common = (1 << n) - 1
    for clique in F.cliques:
        common &= clique
    return common


def split_root_rows(n: int, F: CliqueFamily, common: VertexSet, representatives: list[int]) -> list[int]:
    rows = [0] * n
    for c in bits(common):
        rows[c] |= common & ~(1 << c)
    for clique, c in zip(F.cliques, representatives):
        for v in bits(clique & ~common):
            rows[v] |= 1 << c
            rows[c] |= 1 << v
    return rows


def enumerate_cliques(state: RootState) -> Dict[str, Any]:
    """Squares of connected 3-sun-free split graphs have at most n maximal cliques."""
    G = state["graph"]
    if G.n == 0:
        return advance(state, "enumerate_cliques", stage=RejectionStage.NOT_CONNECTED)
    family = maximal_cliques_capped(G, G.n)
    if isinstance(family, CliqueOverflow):
        return advance(state, "enumerate_cliques", stage=RejectionStage.TOO_MANY_CLIQUES)
    return advance(state, "enumerate_cliques", family=family)


def check_intersection(state: RootState) -> Dict[str, Any]:
    family = state["family"]
    common = universal_clique(family, state["graph"].n)
    if common.bit_count() < len(family):
        return advance(state, "check_intersection", universal=common,
                       stage=RejectionStage.INTERSECTION_TOO_SMALL)
    return advance(state, "check_intersection", universal=common)


def check_helly(state: RootState) -> Dict[str, Any]:
    helly, witness = is_hereditary_clique_helly(state["graph"])
    if not helly:
        return advance(state, "check_helly", witness=witness,
                       stage=RejectionStage.NOT_HEREDITARY_CLIQUE_HELLY)
    return advance(state, "check_helly")


def construct_root(state: RootState) -> Dict[str, Any]:
    """Representatives are the q lowest-indexed vertices of the universal clique."""
    family = state["family"]
    representatives = list(bits(state["universal"]))[: len(family)]
    rows = split_root_rows(state["graph"].n, family, state["universal"], representatives)
    return advance(state, "construct_root", representatives=representatives, root_rows=rows)


def verify_split_root(state: RootState) -> Dict[str, Any]:
    G = state["graph"]
    H = Graph(G.n, state["root_rows"])
    checks = {
        "square_matches": square(H) == G,
        "split": is_split(H)[0],
        "three_sun_free": find_3sun(H) is None,
    }
    if not all(checks.values()):
        return advance(state, "verify_split_root", checks=checks,
                       stage=RejectionStage.FINAL_VERIFICATION_FAILED)
    return advance(state, "verify_split_root", checks=checks, root=H, finished=True)


NODES = {
    "enumerate_cliques": enumerate_cliques,
    "check_intersection": check_intersection,
    "check_helly": check_helly,
    "construct_root": construct_root,
    "verify_split_root": verify_split_root,
}
