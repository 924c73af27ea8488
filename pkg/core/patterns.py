"""Named small graphs: the families, obstructions and worked examples used across the project."""

from itertools import combinations

from core.graph import Graph, square


def empty(n: int) -> Graph:
    return Graph.empty(n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def star(leaves: int) -> Graph:
    """K1,leaves with centre 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def disjoint_edges(k: int) -> Graph:
    """kK2: edges (0,1), (2,3), ..."""
    return Graph.from_edges(2 * k, ((2 * i, 2 * i + 1) for i in range(k)))


def octahedron() -> Graph:
    """Complete 3-partite K2,2,2 with parts {0,1}, {2,3}, {4,5}."""
    missing = {(0, 1), (2, 3), (4, 5)}
    return Graph.from_edges(6, (e for e in combinations(range(6), 2) if e not in missing))


def gem() -> Graph:
    """Induced P4 0-1-3-4 plus apex 2 adjacent to all four."""
    return Graph.from_edges(5, [(0, 1), (1, 3), (3, 4), (2, 0), (2, 1), (2, 3), (2, 4)])


def _sun_edges() -> list[tuple[int, int]]:
    # Triangle 0,1,2; vertex 3 sees 0,1; vertex 4 sees 1,2; vertex 5 sees 2,0.
    return [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)]


def three_sun() -> Graph:
    return Graph.from_edges(6, _sun_edges())


# Extra edges among the three outer vertices that turn the 3-sun into G1..G4.
HELLY_OBSTRUCTION_EXTRAS: dict[int, list[tuple[int, int]]] = {
    1: [],
    2: [(3, 4)],
    3: [(3, 4), (4, 5)],
    4: [(3, 4), (4, 5), (3, 5)],
}


def helly_obstruction(index: int) -> Graph:
    """G1..G4, the minimal graphs that are not hereditary clique-Helly (G1 is the 3-sun)."""
    return Graph.from_edges(6, _sun_edges() + HELLY_OBSTRUCTION_EXTRAS[index])


def pseudo_p5_example() -> Graph:
    """Ptolemaic graph in which (0,1,2,3,4) is a pseudo-P5 but not an induced P5.

    Vertex 5 is adjacent to 0,1,2 and vertex 6 to 2,3,4; the path 1-2-3 is present.
    """
    return Graph.from_edges(7, [(1, 2), (2, 3), (5, 0), (5, 1), (5, 2), (6, 4), (6, 2), (6, 3)])


def distance_hereditary_example() -> Graph:
    """Distance-hereditary but not ptolemaic (it has the induced C4 1-2-3-4)."""
    return Graph.from_edges(7, [(0, 2), (1, 2), (1, 4), (1, 6), (2, 3), (3, 4), (3, 5)])


def distance_hereditary_example_square() -> Graph:
    """Square of :func:`distance_hereditary_example`; chordal, yet with no ptolemaic square root."""
    return square(distance_hereditary_example())
