"""Maximal-clique families and gem-triples."""
