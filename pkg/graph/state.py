"""RootState schema: single source of truth for both square-root pipelines."""

from typing import Any, Dict, List, Optional, TypedDict

from cliques.family import CliqueFamily
from cliques.triples import GemTriple
from core.graph import Graph
from graph.models import CenterPlan, RejectionStage
from recognizers.chordal import EliminationOrder
from recognizers.forbidden import ForbiddenPattern


class RootState(TypedDict):
    """Flat state dict shared by the ptolemaic and the split pipeline."""

    # Input
    graph: Graph

    # Run tracking
    current_step: int           # index into the pipeline's step map
    max_steps_guard: int        # Incremented every node; terminate if > MAX_STEPS_GUARD
    finished: bool
    trail: List[str]            # node names in visiting order

    # Rejection
    stage: Optional[RejectionStage]
    witness: Optional[ForbiddenPattern]

    # Intermediate results
    order: Optional[EliminationOrder]
    family: Optional[CliqueFamily]
    triples: List[GemTriple]
    plan: Optional[CenterPlan]
    root_rows: List[int]
    universal: int              # split pipeline: intersection of all maximal cliques
    representatives: List[int]  # split pipeline: c_1..c_q

    # Output
    root: Optional[Graph]
    checks: Dict[str, Any]      # certificate flags from the final verification


def initial_state(G: Graph) -> RootState:
    """Factory: returns a clean starting state."""
    return RootState(
        graph=G,
        current_step=1,
        max_steps_guard=0,
        finished=False,
        trail=[],
        stage=None,
        witness=None,
        order=None,
        family=None,
        triples=[],
        plan=None,
        root_rows=[0] * G.n,
        universal=0,
        representatives=[],
        root=None,
        checks={},
    )


def advance(state: RootState, node: str, **updates) -> Dict[str, Any]:
    """Common node epilogue: next step, guard tick, trail entry."""
    return {
        "current_step": state["current_step"] + 1,
        "max_steps_guard": state["max_steps_guard"] + 1,
        "trail": state["trail"] + [node],
        **updates,
    }
