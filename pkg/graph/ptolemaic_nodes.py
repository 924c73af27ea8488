"""Ptolemaic pipeline nodes: one node per step of the construction.

Steps: connectivity and chordality gates, maximal cliques, gem-triples, forced
edges, candidate centres, injective centre assignment, centre edges, and a
final check that the candidate root squares back to the input and is ptolemaic.
"""

from typing import Any, Dict

from cliques.family import maximal_cliques_chordal
from cliques.triples import enumerate_gem_triples
from core.graph import Graph, is_connected, square
from graph.centers import assign_centers, candidate_centers, center_edge_rows, forced_edge_rows
from graph.models import RejectionStage
from graph.state import RootState, advance
from recognizers.chordal import chordal_order
from recognizers.classes import is_block_graph, is_ptolemaic, is_tree


def check_connected(state: RootState) -> Dict[str, Any]:
    """A ptolemaic graph is connected, hence so is its square; K0 has no root."""
    G = state["graph"]
    if G.n == 0 or not is_connected(G):
        return advance(state, "check_connected", stage=RejectionStage.NOT_CONNECTED)
    return advance(state, "check_connected")


def check_chordal(state: RootState) -> Dict[str, Any]:
    """Squares of ptolemaic graphs are chordal."""
    order = chordal_order(state["graph"])
    if not order.perfect:
        return advance(state, "check_chordal", order=order, stage=RejectionStage.NOT_CHORDAL)
    return advance(state, "check_chordal", order=order)


def compute_cliques(state: RootState) -> Dict[str, Any]:
    family = maximal_cliques_chordal(state["graph"], state["order"])
    return advance(state, "compute_cliques", family=family)


def find_gem_triples(state: RootState) -> Dict[str, Any]:
    return advance(state, "find_gem_triples", triples=enumerate_gem_triples(state["family"]))


def place_forced_edges(state: RootState) -> Dict[str, Any]:
    rows = forced_edge_rows(state["graph"].n, state["family"], state["triples"])
    return advance(state, "place_forced_edges", root_rows=rows)


def locate_centers(state: RootState) -> Dict[str, Any]:
    plan = candidate_centers(state["graph"], state["family"], state["triples"])
    return advance(state, "locate_centers", plan=plan)


def assign_centers_node(state: RootState) -> Dict[str, Any]:
    plan = assign_centers(state["plan"])
    if plan is None:
        return advance(state, "assign_centers", stage=RejectionStage.ASSIGNMENT_INFEASIBLE)
    return advance(state, "assign_centers", plan=plan)


def place_center_edges(state: RootState) -> Dict[str, Any]:
    rows = center_edge_rows(state["root_rows"], state["family"], state["plan"].assignment)
    return advance(state, "place_center_edges", root_rows=rows)


def verify_root(state: RootState) -> Dict[str, Any]:
    """Check whether the candidate is a ptolemaic square root of the input."""
    G = state["graph"]
    H = Graph(G.n, state["root_rows"])
    checks = {"square_matches": square(H) == G, "ptolemaic": is_ptolemaic(H)}
    if not all(checks.values()):
        return advance(state, "verify_root", checks=checks, stage=RejectionStage.FINAL_VERIFICATION_FAILED)
    classes = tuple(name for name, test in (("tree", is_tree), ("block", is_block_graph)) if test(H))
    checks["root_classes"] = classes
    return advance(state, "verify_root", checks=checks, root=H, finished=True)


NODES = {
    "check_connected": check_connected,
    "check_chordal": check_chordal,
    "compute_cliques": compute_cliques,
    "find_gem_triples": find_gem_triples,
    "place_forced_edges": place_forced_edges,
    "locate_centers": locate_centers,
    "assign_centers": assign_centers_node,
    "place_center_edges": place_center_edges,
    "verify_root": verify_root,
}
