import pytest
from pydantic import ValidationError

from core import patterns
from core.graph import Graph, is_connected, square
from generators.ptolemaic import random_ptolemaic
from generators.specs import PtolemaicGenSpec, SplitGenSpec, SplitMode
from generators.split import random_3sunfree_split
from recognizers.classes import is_ptolemaic, is_split
from recognizers.forbidden import find_3sun


# ── Ptolemaic ───────────────────────────────────────────────────────────
def test_single_vertex():
    assert random_ptolemaic(PtolemaicGenSpec(n=1)) == Graph.empty(1)


def test_pendant_only_pair():
    spec = PtolemaicGenSpec(n=2, pendant=1, true_twin=0, false_twin=0)
    assert random_ptolemaic(spec) == patterns.complete(2)


def test_large_seeded_graph_is_ptolemaic():
    G = random_ptolemaic(PtolemaicGenSpec(n=40, seed=7))
    assert G.n == 40
    assert is_ptolemaic(G)


def test_same_seed_same_graph():
    spec = PtolemaicGenSpec(n=25, seed=123, false_twin=2.0)
    assert random_ptolemaic(spec) == random_ptolemaic(spec)


def test_pendant_only_gives_trees():
    G = random_ptolemaic(PtolemaicGenSpec(n=20, seed=3, true_twin=0, false_twin=0))
    assert G.m == 19 and is_connected(G)


def test_true_twins_only_give_complete_graphs():
    G = random_ptolemaic(PtolemaicGenSpec(n=6, seed=5, pendant=0, false_twin=0))
    assert G == patterns.complete(6)


def test_many_distinct_graphs_across_seeds():
    seen = {random_ptolemaic(PtolemaicGenSpec(n=12, seed=seed)) for seed in range(1000)}
    assert len(seen) >= 50


@pytest.mark.parametrize(
    "kwargs",
    [
        {"n": 0},
        {"n": 5, "seed": -1},
        {"n": 5, "pendant": -1.0},
        {"n": 5, "pendant": 0, "true_twin": 0},
    ],
)
def test_invalid_ptolemaic_specs(kwargs):
    with pytest.raises(ValidationError):
        PtolemaicGenSpec(**kwargs)


def test_metadata_names_seed_and_rng():
    text = PtolemaicGenSpec(n=4, seed=9).metadata()
    assert "seed=9" in text and "rng=python-random-mt19937" in text


# ── Split ───────────────────────────────────────────────────────────────
def test_single_clique_vertex_gives_a_star():
    G = random_3sunfree_split(SplitGenSpec(clique_size=1, independent_size=3))
    assert sorted(G.degree(v) for v in range(G.n)) == [1, 1, 1, 3]


def test_no_independent_vertices_gives_a_clique():
    assert random_3sunfree_split(SplitGenSpec(clique_size=3)) == patterns.complete(3)


@pytest.mark.parametrize("mode", list(SplitMode))
def test_split_output_is_valid(mode):
    spec = SplitGenSpec(clique_size=4, independent_size=5, mode=mode, seed=11)
    H = random_3sunfree_split(spec)
    assert H.n == 9
    assert is_connected(H) and is_split(H)[0] and find_3sun(H) is None


def test_split_is_reproducible():
    spec = SplitGenSpec(clique_size=5, independent_size=6, mode=SplitMode.REJECTION, seed=42)
    assert random_3sunfree_split(spec) == random_3sunfree_split(spec)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"clique_size": 0},
        {"clique_size": 3, "independent_size": -1},
        {"clique_size": 3, "density": 0.0},
        {"clique_size": 3, "density": 1.5},
    ],
)
def test_invalid_split_specs(kwargs):
    with pytest.raises(ValidationError):
        SplitGenSpec(**kwargs)


def test_specs_are_frozen():
    spec = SplitGenSpec(clique_size=2)
    with pytest.raises(ValidationError):
        spec.clique_size = 3


@pytest.mark.parametrize("seed", [175, 263, 351, 527, 703, 911, 967])
def test_rejection_mode_meets_dense_parameters(seed):
    spec = SplitGenSpec(clique_size=8, independent_size=10, mode=SplitMode.REJECTION, seed=seed)
    H = random_3sunfree_split(spec)
    assert H.n == 18
    assert is_connected(H) and is_split(H)[0] and find_3sun(H) is None


def test_rejection_mode_squares_are_not_all_complete():
    squares = [
        square(random_3sunfree_split(SplitGenSpec(clique_size=6, independent_size=8,
                                                  mode=SplitMode.REJECTION, seed=seed)))
        for seed in range(20)
    ]
    assert any(G.m < G.n * (G.n - 1) // 2 for G in squares)


def test_nested_mode_has_a_universal_vertex():
    H = random_3sunfree_split(SplitGenSpec(clique_size=5, independent_size=7, seed=3))
    assert any(H.degree(v) == H.n - 1 for v in range(H.n))
