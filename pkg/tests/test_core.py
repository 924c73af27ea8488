import math
import pickle

import pytest
from hypothesis import given

from core import patterns
from core.errors import GraphFormatError
from core.graph import (
    Graph,
    bits,
    distances_from,
    graphs_equal,
    induced_subgraph,
    is_connected,
    is_edge_subgraph,
    square,
    vertex_set,
)
from core.io import describe, parse_graph, serialize, to_dot
from tests.strategies import graphs


# ── Graph value ─────────────────────────────────────────────────────────
def test_bits_ascending():
    assert list(bits(0b101001)) == [0, 3, 5]
    assert vertex_set([5, 0, 3]) == 0b101001


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])


def test_graph_rejects_self_loop():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])


def test_graph_is_immutable():
    G = patterns.path(3)
    with pytest.raises(AttributeError):
        G.foo = 1


def test_graph_pickles_by_value():
    G = patterns.gem()
    assert pickle.loads(pickle.dumps(G)) == G


def test_edges_canonical_order():
    G = Graph.from_edges(4, [(3, 2), (1, 0), (2, 0)])
    assert G.edges() == [(0, 1), (0, 2), (2, 3)]
    assert G.m == 3


# ── Parsing and serialisation ───────────────────────────────────────────
def test_parse_simple_path():
    assert parse_graph("3\n0 1\n1 2\n") == patterns.path(3)


def test_parse_single_vertex():
    G = parse_graph("1\n")
    assert G.n == 1 and G.m == 0


def test_parse_ignores_comments_and_blank_lines():
    text = "# generated\n\n4\n# edges follow\n0 1\n\n2 3\n"
    assert parse_graph(text) == patterns.disjoint_edges(2)


@pytest.mark.parametrize(
    "text, line",
    [
        ("2\n0 0\n", 2),
        ("3\n0 1\n1 0\n", 3),
        ("3\n0 3\n", 2),
        ("3\n0 1 2\n", 2),
        ("x\n", 1),
        ("3\n0 -1\n", 2),
        ("# only a comment\n", 0),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_serialize_canonical():
    G = Graph.from_edges(3, [(2, 1), (1, 0)])
    assert serialize(G) == "3\n0 1\n1 2\n"
    assert serialize(G, ["seed=1"]) == "# seed=1\n3\n0 1\n1 2\n"


@given(graphs())
def test_serialized_text_parses_back(G):
    assert parse_graph(serialize(G, ["note"])) == G


def test_to_dot_lists_isolated_vertices():
    G = Graph.from_edges(3, [(0, 1)])
    assert to_dot(G) == "graph G {\n  2;\n  0 -- 1;\n}\n"


def test_describe():
    assert describe(0b1001) == "{0,3}"
    assert describe(0) == "{}"


# ── Square ──────────────────────────────────────────────────────────────
def test_square_of_p5(p5):
    assert square(p5).edges() == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]


def test_square_of_complete_graph_is_itself():
    K4 = patterns.complete(4)
    assert square(K4) == K4


def test_square_of_star_is_complete():
    assert square(patterns.star(4)) == patterns.complete(5)


def test_square_of_distance_hereditary_example(dh_square):
    assert dh_square.edges() == [
        (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 4), (1, 6), (2, 3),
        (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (4, 5), (4, 6),
    ]


def test_square_of_empty_graph():
    assert square(Graph.empty(0)) == Graph.empty(0)
    assert square(Graph.empty(3)) == Graph.empty(3)


@given(graphs())
def test_graph_is_edge_subgraph_of_its_square(G):
    assert is_edge_subgraph(G, square(G))


@given(graphs())
def test_square_matches_distances(G):
    G2 = square(G)
    for v in range(G.n):
        d = distances_from(G, v)
        for u in range(G.n):
            assert G2.has_edge(u, v) == (u != v and d[u] <= 2)


# ── Distances and connectivity ─────────────────────────────────────────
def test_distances_on_path(p5):
    assert distances_from(p5, 0) == [0, 1, 2, 3, 4]


def test_distances_unreachable_is_infinite():
    assert distances_from(Graph.empty(2), 0) == [0, math.inf]


def test_distances_reject_bad_source(p5):
    with pytest.raises(ValueError):
        distances_from(p5, 5)


def test_pseudo_p5_root_distances(pseudo_p5_root):
    assert distances_from(pseudo_p5_root, 0)[4] == 4


@pytest.mark.parametrize(
    "G, expected",
    [
        (Graph.empty(0), True),
        (Graph.empty(1), True),
        (patterns.path(5), True),
        (patterns.disjoint_edges(2), False),
        (patterns.distance_hereditary_example(), True),
    ],
)
def test_is_connected(G, expected):
    assert is_connected(G) is expected


def test_graphs_equal_is_label_sensitive():
    assert graphs_equal(patterns.path(3), Graph.from_edges(3, [(0, 1), (1, 2)]))
    assert not graphs_equal(patterns.path(3), Graph.from_edges(3, [(0, 2), (1, 2)]))


def test_induced_subgraph_relabels():
    sub = induced_subgraph(patterns.path(5), [4, 2, 3])
    assert sub == patterns.path(3)
