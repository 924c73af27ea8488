"""Random connected 3-sun-free split graphs.

nested: independent vertices see prefixes of a fixed clique order. Nested
neighbourhoods give a threshold graph, which has no induced P4 and so no 3-sun.
rejection: independent vertices are added one at a time, each seeing a random
non-empty clique subset; a subset that completes a 3-sun is redrawn. After
GEN_MAX_RESAMPLES redraws the vertex becomes a pendant, which cannot lie on a
3-sun since every vertex of one has degree at least 2 inside it.
Vertex labels are shuffled in both modes.
"""

import logging
import random

from config import GEN_MAX_RESAMPLES
from core.errors import GeneratorError
from core.graph import Graph, is_connected
from generators.specs import SplitGenSpec, SplitMode
from recognizers.classes import is_split
from recognizers.forbidden import find_3sun

logger = logging.getLogger(__name__)


def _nested(spec: SplitGenSpec, rng: random.Random) -> list[list[int]]:
    k = spec.clique_size
    return [
        list(range(max(1, sum(rng.random() < spec.density for _ in range(k)))))
        for _ in range(spec.independent_size)
    ]


def _rejection(spec: SplitGenSpec, rng: random.Random) -> list[list[int]]:
    k = spec.clique_size
    edges = [(a, b) for a in range(k) for b in range(a + 1, k)]
    attached = []
    for offset in range(spec.independent_size):
        v = k + offset
        for _ in range(GEN_MAX_RESAMPLES):
            chosen = [c for c in range(k) if rng.random() < spec.density] or [rng.randrange(k)]
            trial = edges + [(v, c) for c in chosen]
            if len(chosen) == 1 or find_3sun(Graph.from_edges(v + 1, trial)) is None:
                break
        else:
            logger.warning("vertex %d falls back to a pendant after %d redraws (seed=%d)",
                           v, GEN_MAX_RESAMPLES, spec.seed)
            chosen = [rng.randrange(k)]
            trial = edges + [(v, chosen[0])]
        edges = trial
        attached.append(chosen)
    return attached


def random_3sunfree_split(spec: SplitGenSpec) -> Graph:
    rng = random.Random(spec.seed)
    k = spec.clique_size
    n = k + spec.independent_size
    label = list(range(n))
    rng.shuffle(label)
    attachments = _nested(spec, rng) if spec.mode is SplitMode.NESTED else _rejection(spec, rng)
    edges = [(label[a], label[b]) for a in range(k) for b in range(a + 1, k)]
    for offset, clique_side in enumerate(attachments):
        edges.extend((label[k + offset], label[c]) for c in clique_side)
    G = Graph.from_edges(n, edges)
    if not (is_connected(G) and is_split(G)[0] and find_3sun(G) is None):
        raise GeneratorError(f"generated graph is not a connected 3-sun-free split graph (seed={spec.seed})")
    return G
