"""
exact: optimum tree degree of a small graph
"""

import argparse
import logging

from mdst_engine.adapters.cli.utils import EXIT_OK, format_tree, load_graph, write_text
from mdst_engine.models import GraphFormat
from mdst_engine.oracle.exact import exact_mdst

logger = logging.getLogger(__name__)


def register_exact_command(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("exact", help="Exact minimum tree degree (small n only)")
    parser.add_argument("--input", "-i", required=True, help="Graph file")
    parser.add_argument("--format", choices=[f.value for f in GraphFormat], default=None)
    parser.add_argument(
        "--max-trees", type=int, default=None, help="Refuse graphs with more spanning trees"
    )
    parser.add_argument("--emit-tree", metavar="PATH", help="Write an optimal tree")
    parser.set_defaults(handler=handle_exact)


def handle_exact(args: argparse.Namespace) -> int:
    graph = load_graph(args.input, args.format)
    delta_star, tree = exact_mdst(graph, max_trees=args.max_trees)
    if args.emit_tree:
        write_text(args.emit_tree, format_tree(tree))
    print(delta_star)
    return EXIT_OK
