"""Hypothesis strategies and networkx bridges shared by the test modules."""

import random
from itertools import combinations

import networkx as nx
from hypothesis import strategies as st

from core.graph import Graph
from generators.ptolemaic import random_ptolemaic
from generators.specs import PtolemaicGenSpec, SplitGenSpec, SplitMode
from generators.split import random_3sunfree_split


def to_nx(G: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges())
    return g


def from_nx(g: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(g.nodes()))}
    return Graph.from_edges(len(index), ((index[u], index[v]) for u, v in g.edges()))


def atlas(min_n: int = 0, max_n: int = 7) -> list[Graph]:
    """Every graph of the networkx atlas (all graphs up to 7 vertices) in the size range."""
    return [from_nx(g) for g in nx.graph_atlas_g() if min_n <= g.number_of_nodes() <= max_n]


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, (p for p, k in zip(pairs, keep) if k))


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    tree = {(p, v) for v, p in zip(range(1, n), parents)}
    rest = [p for p in combinations(range(n), 2) if p not in tree]
    keep = draw(st.lists(st.booleans(), min_size=len(rest), max_size=len(rest)))
    return Graph.from_edges(n, list(tree) + [p for p, k in zip(rest, keep) if k])


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 12) -> Graph:
    n = draw(st.integers(min_n, max_n))
    rng = random.Random(draw(st.integers(0, 2**32)))
    return Graph.from_edges(n, ((rng.randrange(v), v) for v in range(1, n)))


@st.composite
def ptolemaic_graphs(draw, min_n: int = 1, max_n: int = 12) -> Graph:
    spec = PtolemaicGenSpec(
        n=draw(st.integers(min_n, max_n)),
        seed=draw(st.integers(0, 2**32)),
        pendant=draw(st.sampled_from([0.5, 1.0, 2.0])),
        true_twin=draw(st.sampled_from([0.5, 1.0, 2.0])),
        false_twin=draw(st.sampled_from([0.0, 1.0, 2.0])),
    )
    return random_ptolemaic(spec)


@st.composite
def split_graphs(draw, max_clique: int = 5, max_independent: int = 5) -> Graph:
    spec = SplitGenSpec(
        clique_size=draw(st.integers(1, max_clique)),
        independent_size=draw(st.integers(0, max_independent)),
        density=draw(st.sampled_from([0.25, 0.5, 0.75, 1.0])),
        seed=draw(st.integers(0, 2**32)),
        mode=draw(st.sampled_from(list(SplitMode))),
    )
    return random_3sunfree_split(spec)
