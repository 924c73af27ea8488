"""Gem-triples of a clique family.

(A, B, C) is a gem-triple when the cliques are pairwise distinct and
A∩C ≠ ∅, A∩C ⊆ B, A∩B ⊄ C and B∩C ⊄ A.
"""

from typing import NamedTuple

from cliques.family import CliqueFamily


class GemTriple(NamedTuple):
    a: int
    b: int
    c: int


def is_gem_triple(F: CliqueFamily, a: int, b: int, c: int) -> bool:
    if len({a, b, c}) != 3:
        return False
    meet = F.intersections
    ac = meet[a][c]
    return (
        ac != 0
        and ac & ~F.cliques[b] == 0
        and meet[a][b] & ~F.cliques[c] != 0
        and meet[b][c] & ~F.cliques[a] != 0
    )


def enumerate_gem_triples(F: CliqueFamily) -> list[GemTriple]:
    """All gem-triples in lexicographic index order; (a,b,c) is listed iff (c,b,a) is."""
    k = len(F)
    cliques = F.cliques
    meet = F.intersections
    triples = []
    for a in range(k):
        row = meet[a]
        for b in range(k):
            if b == a:
                continue
            ab = row[b]
            if not ab:
                continue
            for c in range(k):
                if c == a or c == b:
                    continue
                ac = row[c]
                if ac and ac & ~cliques[b] == 0 and ab & ~cliques[c] and meet[b][c] & ~cliques[a]:
                    triples.append(GemTriple(a, b, c))
    return triples
