"""
gen: write a generated graph
"""

import argparse
import logging

from mdst_engine.adapters.cli.utils import EXIT_OK, write_text
from mdst_engine.models import GenSpec, GraphFormat, GraphKind, format_graph
from mdst_engine.oracle.generators import generate

logger = logging.getLogger(__name__)


def register_gen_command(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("gen", help="Generate a graph")
    parser.add_argument("kind", choices=[k.value for k in GraphKind])
    parser.add_argument("n", type=int, nargs="?", default=None, help="Vertex count")
    parser.add_argument("--p", type=float, default=None, help="Edge probability (gnp)")
    parser.add_argument("--d", type=int, default=None, help="Dimension (hypercube) or bristles (broom)")
    parser.add_argument("--extra", type=int, default=0, help="Extra edges (ham-path-plus-edges)")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--format", choices=[f.value for f in GraphFormat], default=GraphFormat.EDGE_LIST.value
    )
    parser.add_argument("--output", "-o", default="-", help="Output file, '-' for stdout")
    parser.set_defaults(handler=handle_gen)


def handle_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(
        kind=GraphKind(args.kind), n=args.n, p=args.p, d=args.d, extra=args.extra, seed=args.seed
    )
    generated = generate(spec)
    known = generated.delta_star if generated.delta_star is not None else "unknown"
    logger.info(f"{generated.provenance}: n={generated.graph.n}, m={generated.graph.m}, Δ*={known}")
    write_text(args.output, format_graph(generated.graph, GraphFormat(args.format)))
    return EXIT_OK
