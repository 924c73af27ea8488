"""Graph assembly: builds and compiles the square-root pipelines."""

from langgraph.graph import END, START, StateGraph

from graph import ptolemaic_nodes, split_nodes
from graph.router import PTOLEMAIC_STEP_MAP, SPLIT_STEP_MAP, make_router
from graph.state import RootState
from graph.terminal_nodes import finish_node, reject_node


def build_graph(step_map: dict[int, str], nodes: dict):
    """
    Assemble a pipeline over a step map.
    Returns a compiled graph ready for invoke.
    """
    builder = StateGraph(RootState)

    # ── Register step nodes ─────────────────────────────────────────
    for node_name in step_map.values():
        builder.add_node(node_name, nodes[node_name])

    # ── Register terminal nodes ─────────────────────────────────────
    builder.add_node("reject", reject_node)
    builder.add_node("finish", finish_node)

    # ── Entry edge ──────────────────────────────────────────────────
    builder.add_edge(START, step_map[1])

    # ── Conditional edges: every step → router ──────────────────────
    router = make_router(step_map)
    for node_name in step_map.values():
        builder.add_conditional_edges(node_name, router)

    # ── Reject → finish → END ───────────────────────────────────────
    builder.add_edge("reject", "finish")
    builder.add_edge("finish", END)

    # No checkpointer: runs are single-shot with no interrupts to resume.
    return builder.compile()


def build_ptolemaic_graph():
    return build_graph(PTOLEMAIC_STEP_MAP, ptolemaic_nodes.NODES)


def build_split_graph():
    return build_graph(SPLIT_STEP_MAP, split_nodes.NODES)
