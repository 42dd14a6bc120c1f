"""
Command-line front end: ``python -m coxeter_links <command>``.

Commands: analyze, realize, orderings, lehmer-scan, render. Failures print an
error record and exit with the code attached to the exception class (1 parse
or usage, 2 validation, 3 not realizable, 4 budget, 5 internal).
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

import networkx as nx

from .analysis import CoxeterLinkAnalyzer
from .chord_core import ChordSystem, SimpleGraph
from .config import ToolkitConfig
from .documents import DiagramDocument, GraphDocument, dump_document, load_diagram, load_graph
from .errors import CoxeterLinkError, InvalidGraphError
from .log import configure_logging
from .realizer import GraphRealizer, RealizeMethod, star_graph
from .rendering import render_system
from .scans import LehmerScanner, enumerate_orderings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 4


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with status 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _write(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    try:
        Path(output).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CoxeterLinkError(f"cannot write {output}: {exc.strerror}") from exc


def _render(model, fmt: str) -> str:
    if fmt == "machine":
        return model.model_dump_json(indent=2)
    return model.to_text()


# --------------------------------------------------------------------------
# Commands
# --------------------------------------------------------------------------

def cmd_analyze(args: argparse.Namespace, config: ToolkitConfig) -> int:
    document = load_diagram(args.path)
    system = document.to_system()
    report = CoxeterLinkAnalyzer(config).analyze(
        system, name=document.name or Path(args.path).stem, require_coxeter=args.require_coxeter
    )
    _write(_render(report, args.format), args.output)
    if args.svg:
        _write(render_system(system), args.svg)
    return EXIT_OK


def _shape_graph(args: argparse.Namespace) -> Optional[tuple]:
    if args.star:
        return star_graph(*args.star), RealizeMethod.STAR, "star " + " ".join(map(str, args.star))
    if args.cycle:
        return SimpleGraph.from_networkx(nx.cycle_graph(args.cycle)), RealizeMethod.CYCLE, f"cycle {args.cycle}"
    if args.complete:
        return (SimpleGraph.from_networkx(nx.complete_graph(args.complete)), RealizeMethod.COMPLETE,
                f"complete {args.complete}")
    if args.bipartite:
        p, q = args.bipartite
        return (SimpleGraph.from_networkx(nx.complete_bipartite_graph(p, q)), RealizeMethod.BIPARTITE,
                f"bipartite {p} {q}")
    if args.path_graph:
        return SimpleGraph.from_networkx(nx.path_graph(args.path_graph)), RealizeMethod.PATH, f"path {args.path_graph}"
    return None


def cmd_realize(args: argparse.Namespace, config: ToolkitConfig) -> int:
    shape = _shape_graph(args)
    if shape is not None:
        graph, method, name = shape
        if args.method != RealizeMethod.AUTO.value:
            method = RealizeMethod(args.method)
    elif args.graph:
        graph_document: GraphDocument = load_graph(args.graph)
        graph = graph_document.to_graph()
        method = RealizeMethod(args.method)
        name = graph_document.name or Path(args.graph).stem
    else:
        raise InvalidGraphError("give a graph file or one of --star, --cycle, --complete, --bipartite, --path")

    realization = GraphRealizer(config).realize(graph, method)
    system = realization.system()
    if system is None:
        logger.warning("vertex order is not admissible; writing the default orientation",
                       extra={"graph": name})
        system = ChordSystem.from_diagram(realization.diagram, realization.chord_order())
    document = DiagramDocument.from_system(system, name=name)
    _write(dump_document(document), args.output)
    if args.output is not None:
        summary = {
            "graph": name,
            "method": realization.method.value,
            "chords": realization.diagram.n,
            "chord_of_vertex": list(realization.chord_of_vertex),
        }
        sys.stdout.write((json.dumps(summary) if args.format == "machine" else
                          f"{name}: {realization.diagram.n} chords via {realization.method.value}") + "\n")
    if args.svg:
        _write(render_system(system), args.svg)
    return EXIT_OK


def cmd_orderings(args: argparse.Namespace, config: ToolkitConfig) -> int:
    document = load_diagram(args.path)
    system = document.to_system()
    result = enumerate_orderings(system.diagram, config, name=document.name or Path(args.path).stem)
    _write(_render(result, args.format), args.output)
    return EXIT_OK if result.complete else EXIT_BUDGET


def cmd_lehmer_scan(args: argparse.Namespace, config: ToolkitConfig) -> int:
    summary = LehmerScanner(config).scan(args.max_chords)
    _write(_render(summary, args.format), args.output)
    return EXIT_OK


def cmd_render(args: argparse.Namespace, config: ToolkitConfig) -> int:
    system = load_diagram(args.path).to_system()
    _write(render_system(system), args.output)
    return EXIT_OK


# --------------------------------------------------------------------------
# Parser
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, help="root-finder tolerance (default 1e-10)")
    common.add_argument("--format", choices=["text", "machine"], default="text")
    common.add_argument("-o", "--output", help="write the result here instead of stdout")
    common.add_argument("--log-level", help="log level for JSON logs on stderr (default WARNING)")

    parser = _Parser(prog="coxeter_links", description="Coxeter links of chord diagrams")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    analyze = commands.add_parser("analyze", parents=[common], help="analyze a chord system document")
    analyze.add_argument("path")
    analyze.add_argument("--require-coxeter", action="store_true", help="reject non-Coxeter-type systems")
    analyze.add_argument("--svg", help="also write an SVG picture here")
    analyze.set_defaults(handler=cmd_analyze)

    realize = commands.add_parser("realize", parents=[common], help="realize a graph as a chord diagram")
    realize.add_argument("graph", nargs="?", help="graph document")
    realize.add_argument("--method", choices=[m.value for m in RealizeMethod], default=RealizeMethod.AUTO.value)
    realize.add_argument("--budget", type=_positive, help="maximum matchings examined by the exhaustive search")
    realize.add_argument("--svg", help="also write an SVG picture here")
    shapes = realize.add_mutually_exclusive_group()
    shapes.add_argument("--star", type=_positive, nargs="+", metavar="P", help="Star(P1, ..., Pk)")
    shapes.add_argument("--cycle", type=_positive, metavar="N")
    shapes.add_argument("--complete", type=_positive, metavar="N")
    shapes.add_argument("--bipartite", type=_positive, nargs=2, metavar=("P", "Q"))
    shapes.add_argument("--path", dest="path_graph", type=_positive, metavar="N")
    realize.set_defaults(handler=cmd_realize)

    orderings = commands.add_parser("orderings", parents=[common],
                                    help="list Coxeter-type orderings up to sink/source moves")
    orderings.add_argument("path")
    orderings.add_argument("--budget", type=_positive, help="maximum reversal patterns examined")
    orderings.set_defaults(handler=cmd_orderings)

    scan = commands.add_parser("lehmer-scan", parents=[common], help="exhaustive Mahler measure scan")
    scan.add_argument("--max-chords", type=_positive, required=True)
    scan.set_defaults(handler=cmd_lehmer_scan)

    render = commands.add_parser("render", parents=[common], help="draw a chord system as SVG")
    render.add_argument("path")
    render.set_defaults(handler=cmd_render)
    return parser


def _config(args: argparse.Namespace) -> ToolkitConfig:
    budget = getattr(args, "budget", None)
    overrides = {"root_tolerance": args.tol, "log_level": args.log_level}
    if args.command == "realize":
        overrides["realize_budget"] = budget
    elif args.command == "orderings":
        overrides["orderings_budget"] = budget
    return ToolkitConfig.from_env().with_overrides(**overrides)


def _report_error(exc: CoxeterLinkError, fmt: str) -> None:
    if fmt == "machine":
        sys.stdout.write(json.dumps(exc.to_record()) + "\n")
        return
    sys.stderr.write(f"error [{exc.error_code}]: {exc.message}\n")
    if exc.details:
        sys.stderr.write(f"  {json.dumps(exc.details)}\n")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "text")
    try:
        config = _config(args)
    except ValueError as exc:
        parser.error(str(exc))
    configure_logging(config.log_level)
    try:
        return args.handler(args, config)
    except CoxeterLinkError as exc:
        if exc.exit_code == 5:
            logger.error("internal failure", extra={"error_code": exc.error_code, "details": exc.details})
        _report_error(exc, fmt)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
