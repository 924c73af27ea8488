"""Deterministic routers: pure rule-based branching over the step maps."""

import logging
from typing import Callable

from config import MAX_STEPS_GUARD
from graph.state import RootState

logger = logging.getLogger(__name__)

# Mapping: step number → node name
PTOLEMAIC_STEP_MAP: dict[int, str] = {
    1: "check_connected",
    2: "check_chordal",
    3: "compute_cliques",
    4: "find_gem_triples",
    5: "place_forced_edges",
    6: "locate_centers",
    7: "assign_centers",
    8: "place_center_edges",
    9: "verify_root",
}

SPLIT_STEP_MAP: dict[int, str] = {
    1: "enumerate_cliques",
    2: "check_intersection",
    3: "check_helly",
    4: "construct_root",
    5: "verify_split_root",
}


def make_router(step_map: dict[int, str]) -> Callable[[RootState], str]:
    """
    Build a router over a step map.  Priority: guard > finished > rejection > next step.
    Called via add_conditional_edges after every node.
    """

    def router(state: RootState) -> str:
        # Guard: hard terminate if exceeded
        if state["max_steps_guard"] > MAX_STEPS_GUARD:
            logger.warning("step guard exceeded after %s", state["trail"])
            return "finish"

        # Already done
        if state["finished"]:
            return "finish"

        # A node refused the input
        if state["stage"] is not None:
            return "reject"

        step = state["current_step"]
        if step in step_map:
            return step_map[step]

        # Default: done
        return "finish"

    return router
