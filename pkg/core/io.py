"""Edge-list and DOT text formats.

Edge-list format: the first non-comment line holds the vertex count n, every
further non-comment line one edge "u v" (0-based, u != v). Lines starting with
'#' and blank lines are ignored. Serialization is canonical: header first, then
edges sorted by (min endpoint, max endpoint).
"""

from collections.abc import Iterable

from core.errors import GraphFormatError
from core.graph import Graph, bits


def parse_graph(text: str) -> Graph:
    """Parse edge-list text. Duplicate edges and self-loops are errors."""
    n = None
    rows: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1 or not _is_decimal(tokens[0]):
                raise GraphFormatError(lineno, f"expected vertex count, got {line!r}")
            n = int(tokens[0])
            rows = [0] * n
            continue
        if len(tokens) != 2 or not all(_is_decimal(t) for t in tokens):
            raise GraphFormatError(lineno, f"expected edge 'u v', got {line!r}")
        u, v = int(tokens[0]), int(tokens[1])
        if u >= n or v >= n:
            raise GraphFormatError(lineno, f"vertex index out of range for n={n}: {line!r}")
        if u == v:
            raise GraphFormatError(lineno, f"self-loop at vertex {u}")
        if rows[u] >> v & 1:
            raise GraphFormatError(lineno, f"duplicate edge {min(u, v)} {max(u, v)}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    if n is None:
        raise GraphFormatError(0, "missing vertex count header")
    return Graph(n, rows)


def _is_decimal(token: str) -> bool:
    return token.isascii() and token.isdigit()


def serialize(G: Graph, comments: Iterable[str] = ()) -> str:
    """Canonical edge-list text; comments are emitted first as '# ' lines."""
    lines = [f"# {c}" for c in comments]
    lines.append(str(G.n))
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def to_dot(G: Graph, name: str = "G") -> str:
    """Undirected DOT rendering with sorted edges; isolated vertices appear as bare nodes."""
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(G.n) if not G.rows[v])
    lines.extend(f"  {u} -- {v};" for u, v in G.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def edge_pairs(G: Graph) -> list[list[int]]:
    """Edges as two-element lists, the shape used in JSON reports."""
    return [[u, v] for u, v in G.edges()]


def describe(mask: int) -> str:
    """Human-readable vertex set, e.g. ``{0,3,5}``."""
    return "{" + ",".join(str(v) for v in bits(mask)) + "}"
