"""Command-line entrypoint: every operation behind stable formats and exit codes.

Exit codes: 0 root found / check true, 1 no root / check false,
2 input or usage error, 3 oracle budget exceeded.
"""

import argparse
import logging
import sys
from typing import Any

from pydantic import BaseModel, ValidationError

from config import DEFAULT_FORMAT, LOG_LEVEL, ORACLE_BUDGET
from core.errors import GraphError
from core.graph import Graph, is_connected, square
from core.io import describe, edge_pairs, parse_graph, serialize, to_dot
from generators.ptolemaic import random_ptolemaic
from generators.specs import PtolemaicGenSpec, SplitGenSpec, SplitMode
from generators.split import random_3sunfree_split
from graph.roots import ptolemaic_square_root, three_sun_free_split_root
from oracle.bruteforce import OracleStatus, min_root_bruteforce
from oracle.predicates import CLASS_PREDICATES, get_predicate
from recognizers.chordal import chordal_order
from recognizers.classes import is_distance_hereditary, is_ptolemaic, is_split
from recognizers.forbidden import ForbiddenPattern, find_3sun, find_c4, find_gem, is_hereditary_clique_helly
from tracing import stage_trace

logger = logging.getLogger(__name__)

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

CHECK_CLASSES = ("chordal", "split", "distance-hereditary", "ptolemaic", "hch", "3sun-free")
GEN_MODES = ("ptolemaic", "split-nested", "split-rejection")


# ── Report model ────────────────────────────────────────────────────────
class Report(BaseModel):
    """JSON report; field names are stable (documented in README)."""

    command: str
    verdict: bool | str
    stage: str | None = None
    edges: int | None = None
    witness: dict[str, Any] | None = None
    certificate: dict[str, Any] | None = None
    graph: list[list[int]] | None = None


def _witness(pattern: ForbiddenPattern | None) -> dict[str, Any] | None:
    if pattern is None:
        return None
    return {"pattern": pattern.pattern.value, "vertices": list(pattern.witness)}


# ── Output helpers ──────────────────────────────────────────────────────
def _write_graph(G: Graph, fmt: str, comments: list[str]) -> None:
    if fmt == "dot":
        sys.stdout.write("".join(f"// {c}\n" for c in comments) + to_dot(G))
    else:
        sys.stdout.write(serialize(G, comments))


def _write_report(report: Report) -> None:
    sys.stdout.write(report.model_dump_json(indent=2) + "\n")


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, encoding="utf-8") as handle:
        return parse_graph(handle.read())


# ── Subcommands ─────────────────────────────────────────────────────────
def cmd_square(args) -> int:
    G2 = square(_read_graph(args.input))
    if args.format == "json":
        _write_report(Report(command="square", verdict=True, edges=G2.m, graph=edge_pairs(G2)))
    else:
        _write_graph(G2, args.format, [])
    return EXIT_TRUE


def _check(cls: str, G: Graph) -> tuple[bool, ForbiddenPattern | None, str | None]:
    """Verdict, forbidden-pattern witness, and a free-form note."""
    if cls == "chordal":
        order = chordal_order(G)
        if order.perfect:
            return True, None, None
        return False, find_c4(G), f"elimination fails at vertex {order.failed_at}"
    if cls == "split":
        ok, parts = is_split(G)
        if ok:
            return True, None, f"clique={describe(parts.clique)} independent={describe(parts.independent)}"
        return False, find_c4(G), None
    if cls == "distance-hereditary":
        return is_distance_hereditary(G), None, None
    if cls == "ptolemaic":
        if is_ptolemaic(G):
            return True, None, None
        if G.n == 0 or not is_connected(G):
            return False, None, "not connected"
        return False, find_c4(G) or find_gem(G), None
    if cls == "hch":
        ok, witness = is_hereditary_clique_helly(G)
        return ok, witness, None
    witness = find_3sun(G)
    return witness is None, witness, None


def cmd_check(args) -> int:
    G = _read_graph(args.input)
    verdict, witness, note = _check(args.cls, G)
    if args.format == "json":
        _write_report(Report(command=f"check {args.cls}", verdict=verdict, witness=_witness(witness)))
    else:
        lines = [f"{args.cls}: {'true' if verdict else 'false'}"]
        if witness is not None:
            lines.append(f"witness: {witness.pattern.value} {' '.join(map(str, witness.witness))}")
        if note:
            lines.append(f"note: {note}")
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_TRUE if verdict else EXIT_FALSE


def cmd_root(args) -> int:
    G = _read_graph(args.input)
    result = ptolemaic_square_root(G) if args.cls == "ptolemaic" else three_sun_free_split_root(G)
    certificate = None
    if result.certificate is not None:
        certificate = {
            "clique": list(result.certificate.clique),
            "representatives": list(result.certificate.representatives),
        }
    if args.format == "json":
        _write_report(Report(
            command=f"root {args.cls}",
            verdict=result.outcome.value,
            stage=result.stage.value if result.stage else None,
            edges=result.edges,
            witness=_witness(result.witness),
            certificate=certificate,
            graph=edge_pairs(result.root) if result.found else None,
        ))
    elif not result.found:
        line = f"no-root stage={result.stage.value}"
        if result.witness is not None:
            line += f" witness={result.witness.pattern.value}:{','.join(map(str, result.witness.witness))}"
        sys.stdout.write(line + "\n")
    else:
        if args.cls == "ptolemaic":
            summary = [f"edges={result.edges} minimal=true"]
        else:
            summary = [
                f"edges={result.edges}",
                f"clique={','.join(map(str, certificate['clique']))} "
                f"representatives={','.join(map(str, certificate['representatives']))}",
            ]
        _write_graph(result.root, args.format, [])
        sys.stdout.write("".join(f"# {line}\n" for line in summary))
    return EXIT_TRUE if result.found else EXIT_FALSE


def cmd_oracle(args) -> int:
    G = _read_graph(args.input)
    outcome = min_root_bruteforce(G, get_predicate(args.cls), budget=args.budget)
    if args.format == "json":
        _write_report(Report(
            command=f"oracle {args.cls}",
            verdict=outcome.status.value,
            edges=outcome.edges,
            graph=edge_pairs(outcome.root) if outcome.root is not None else None,
        ))
    elif outcome.root is not None:
        _write_graph(outcome.root, args.format, [])
        sys.stdout.write(f"# edges={outcome.edges} examined={outcome.examined}\n")
    else:
        sys.stdout.write(f"{outcome.status.value} examined={outcome.examined}\n")
    if outcome.status is OracleStatus.BUDGET_EXCEEDED:
        return EXIT_BUDGET
    return EXIT_TRUE if outcome.status is OracleStatus.FOUND else EXIT_FALSE


def cmd_gen(args) -> int:
    if args.mode == "ptolemaic":
        pendant, true_twin, false_twin = args.weights
        spec = PtolemaicGenSpec(n=args.n, seed=args.seed, pendant=pendant,
                                true_twin=true_twin, false_twin=false_twin)
        G = random_ptolemaic(spec)
    else:
        spec = SplitGenSpec(clique_size=args.clique, independent_size=args.independent,
                            density=args.density, seed=args.seed,
                            mode=SplitMode(args.mode.removeprefix("split-")))
        G = random_3sunfree_split(spec)
    comments = [spec.metadata()]
    if args.square:
        G = square(G)
        comments.append("emitted=square")
    if args.format == "json":
        _write_report(Report(command=f"gen {args.mode}", verdict=True, edges=G.m, graph=edge_pairs(G),
                             certificate={"metadata": comments}))
    else:
        _write_graph(G, args.format, comments)
    return EXIT_TRUE


# ── Parser ──────────────────────────────────────────────────────────────
def _weights(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected three comma-separated weights")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid weights {text!r}") from None


def _output_format(text: str) -> str:
    return "json" if text == "json-report" else text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sqroot", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p):
        p.add_argument("--format", type=_output_format, choices=("edgelist", "dot", "json"), default=DEFAULT_FORMAT,
                       help="edgelist, dot, or json (alias json-report)")
        return p

    p = with_format(sub.add_parser("square", help="print the square of a graph"))
    p.add_argument("input", help="edge-list file, or - for stdin")
    p.set_defaults(func=cmd_square)

    p = with_format(sub.add_parser("check", help="test class membership"))
    p.add_argument("cls", choices=CHECK_CLASSES)
    p.add_argument("input")
    p.set_defaults(func=cmd_check)

    p = with_format(sub.add_parser("root", help="find a square root"))
    p.add_argument("cls", choices=("ptolemaic", "split3sf"))
    p.add_argument("input")
    p.set_defaults(func=cmd_root)

    p = with_format(sub.add_parser("oracle", help="brute-force minimum root"))
    p.add_argument("cls", choices=sorted(CLASS_PREDICATES))
    p.add_argument("input")
    p.add_argument("--budget", type=int, default=ORACLE_BUDGET)
    p.set_defaults(func=cmd_oracle)

    p = with_format(sub.add_parser("gen", help="emit a corpus graph"))
    p.add_argument("mode", choices=GEN_MODES)
    p.add_argument("--n", type=int, default=10, help="vertex count (ptolemaic)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weights", type=_weights, default=(1.0, 1.0, 1.0),
                   help="pendant,true-twin,false-twin weights (ptolemaic)")
    p.add_argument("--clique", type=int, default=3, help="clique size (split)")
    p.add_argument("--independent", type=int, default=3, help="independent set size (split)")
    p.add_argument("--density", type=float, default=0.5, help="attachment density (split)")
    p.add_argument("--square", action="store_true", help="emit the square of the generated graph")
    p.set_defaults(func=cmd_gen)
    return parser


def run(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=LOG_LEVEL, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_TRUE
    try:
        with stage_trace("cli", command=args.command):
            return args.func(args)
    except (GraphError, ValidationError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


# ── Run ─────────────────────────────────────────────────────────────────
if __name__ == "__main__":
    sys.exit(run())
