"""Random ptolemaic graphs.

Starting from K1, each new vertex is attached to a uniformly chosen existing
vertex v as a pendant, a true twin of v, or (when v is simplicial and not
isolated) a false twin of v. Each operation keeps the graph connected, chordal
and gem-free. The generator is sound but does not claim to reach every
ptolemaic graph.
"""

import logging
import random

from config import GEN_MAX_RETRIES
from core.errors import GeneratorError
from core.graph import Graph, bits
from generators.specs import PtolemaicGenSpec
from recognizers.classes import is_ptolemaic

logger = logging.getLogger(__name__)

# Seed offset between perturbed rebuilds.
_RETRY_STRIDE = 0x9E3779B97F4A7C15


def _is_simplicial(rows: list[int], v: int) -> bool:
    nbrs = rows[v]
    return all(nbrs & ~rows[u] & ~(1 << u) == 0 for u in bits(nbrs))


def _grow(spec: PtolemaicGenSpec, seed: int) -> Graph:
    rng = random.Random(seed)
    rows = [0]
    for new in range(1, spec.n):
        v = rng.randrange(new)
        ops = [("pendant", spec.pendant), ("true_twin", spec.true_twin)]
        if spec.false_twin > 0 and rows[v] and _is_simplicial(rows, v):
            ops.append(("false_twin", spec.false_twin))
        names, weights = zip(*((op, w) for op, w in ops if w > 0))
        op = rng.choices(names, weights=weights)[0]
        if op == "pendant":
            nbrs = 1 << v
        elif op == "true_twin":
            nbrs = rows[v] | 1 << v
        else:
            nbrs = rows[v]
        rows.append(nbrs)
        for u in bits(nbrs):
            rows[u] |= 1 << new
    return Graph(spec.n, rows)


def random_ptolemaic(spec: PtolemaicGenSpec) -> Graph:
    for attempt in range(GEN_MAX_RETRIES + 1):
        seed = (spec.seed + attempt * _RETRY_STRIDE) % 2**64
        G = _grow(spec, seed)
        if is_ptolemaic(G):
            return G
        logger.warning("generated graph failed the ptolemaic check (seed=%d); retrying", seed)
    raise GeneratorError(f"no ptolemaic graph after {GEN_MAX_RETRIES + 1} attempts from seed {spec.seed}")
