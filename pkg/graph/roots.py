"""Public entry points: run a pipeline and turn its final state into a RootResult."""

from core.graph import Graph, members
from graph.builder import build_ptolemaic_graph, build_split_graph
from graph.models import Outcome, RootResult, SplitRootCertificate
from graph.state import RootState, initial_state
from tracing import stage_trace

# ── Compiled pipelines (lazy singletons) ───────────────────────────────
_pipelines: dict[str, object] = {}


def _get_pipeline(kind: str):
    """Compile a pipeline once, reuse it on every call."""
    if kind not in _pipelines:
        _pipelines[kind] = build_ptolemaic_graph() if kind == "ptolemaic" else build_split_graph()
    return _pipelines[kind]


def _run(kind: str, G: Graph) -> RootState:
    with stage_trace(f"{kind}_square_root", n=G.n, m=G.m):
        return _get_pipeline(kind).invoke(initial_state(G))


def ptolemaic_square_root(G: Graph) -> RootResult:
    """Decide whether G has a ptolemaic square root; on success the root has the fewest edges possible."""
    final = _run("ptolemaic", G)
    trail = tuple(final["trail"])
    root = final["root"]
    if root is None:
        return RootResult(outcome=Outcome.NO_ROOT, stage=final["stage"], trail=trail)
    checks = final["checks"]
    return RootResult(
        outcome=Outcome.ROOT,
        root=root,
        edges=root.m,
        square_matches=checks["square_matches"],
        ptolemaic=checks["ptolemaic"],
        root_classes=checks["root_classes"],
        trail=trail,
    )


def three_sun_free_split_root(G: Graph) -> RootResult:
    """Decide whether G is the square of a connected 3-sun-free split graph and build such a root."""
    final = _run("split", G)
    trail = tuple(final["trail"])
    root = final["root"]
    if root is None:
        return RootResult(
            outcome=Outcome.NO_ROOT, stage=final["stage"], witness=final["witness"], trail=trail,
        )
    checks = final["checks"]
    certificate = SplitRootCertificate(
        clique=members(final["universal"]),
        representatives=tuple(final["representatives"]),
        root=root,
    )
    return RootResult(
        outcome=Outcome.ROOT,
        root=root,
        edges=root.m,
        square_matches=checks["square_matches"],
        split=checks["split"],
        three_sun_free=checks["three_sun_free"],
        certificate=certificate,
        trail=trail,
    )
