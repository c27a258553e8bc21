"""
solve: approximate minimum-degree spanning tree with a certificate
"""

import argparse
import logging

from mdst_engine.adapters.cli.utils import (
    EXIT_OK,
    EXIT_REJECTED,
    format_tree,
    load_graph,
    render_table,
    write_text,
)
from mdst_engine.config.settings import settings
from mdst_engine.core.driver import improved_mdst
from mdst_engine.core.errors import TimedOut
from mdst_engine.models import GraphFormat, RunConfig, SolveReport

logger = logging.getLogger(__name__)


def register_solve_command(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("solve", help="Compute a low-degree spanning tree")
    parser.add_argument("--input", "-i", required=True, help="Graph file, '-' for stdin")
    parser.add_argument("--format", choices=[f.value for f in GraphFormat], default=None)
    parser.add_argument(
        "--epsilon", type=float, default=None, help="Approximation parameter in (0, 1/6)"
    )
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--emit-tree", metavar="PATH", help="Write tree edges, one 'u v' per line")
    parser.add_argument("--emit-cert", metavar="PATH", help="Write the certificate as JSON")
    parser.add_argument("--json", action="store_true", help="Print the report as JSON")
    parser.add_argument("--no-timings", action="store_true", help="Null wall_ms in the report")
    parser.add_argument("--check-invariants", action="store_true")
    parser.add_argument("--max-wall-seconds", type=float, default=None)
    parser.set_defaults(handler=handle_solve)


def handle_solve(args: argparse.Namespace) -> int:
    # flags first: a bad epsilon is exit 3 even when the input is broken too
    config = RunConfig(
        eps_user=args.epsilon if args.epsilon is not None else settings.solver.default_epsilon,
        seed=args.seed,
        max_wall_seconds=args.max_wall_seconds or settings.solver.max_wall_seconds,
        threshold_scale=settings.solver.threshold_scale,
        check_invariants=args.check_invariants or settings.solver.check_invariants,
    )
    graph = load_graph(args.input, args.format)

    try:
        result = improved_mdst(graph, config)
    except TimedOut as e:
        logger.warning(f"⏰ {e}; best tree so far has Δ={e.tree.delta}")
        if args.emit_tree:
            write_text(args.emit_tree, format_tree(e.tree))
        return EXIT_REJECTED

    if args.emit_tree:
        write_text(args.emit_tree, format_tree(result.tree))
    if args.emit_cert:
        if result.certificate is not None:
            write_text(args.emit_cert, result.certificate.model_dump_json(indent=2) + "\n")
        else:
            logger.info(f"no certificate: run ended in {result.phase.value}")

    report = SolveReport.from_result(result, config, timings=not args.no_timings)
    if args.json:
        print(report.model_dump_json())
    else:
        print(render_table(report.model_dump(mode="json")), end="")
    return EXIT_OK
