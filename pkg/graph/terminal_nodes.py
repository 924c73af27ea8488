"""Terminal nodes shared by both pipelines."""

import logging

from graph.state import RootState

logger = logging.getLogger(__name__)


def reject_node(state: RootState) -> dict:
    """Records the refusal and ends the run."""
    logger.info(
        "no root: stage=%s n=%d m=%d after %s",
        state["stage"].value, state["graph"].n, state["graph"].m, state["trail"],
    )
    return {"finished": True, "root": None}


def finish_node(state: RootState) -> dict:
    """Terminal node: marks the run as complete."""
    return {"finished": True}
