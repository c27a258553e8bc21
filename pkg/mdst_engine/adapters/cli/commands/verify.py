"""
verify: check a certificate against a graph and a tree
"""

import argparse
import json
import logging

from mdst_engine.adapters.cli.utils import (
    EXIT_OK,
    EXIT_REJECTED,
    load_certificate,
    load_graph,
    load_tree,
)
from mdst_engine.core.certificate import explain_certificate, verify_certificate
from mdst_engine.core.errors import CertificateError, TreeError
from mdst_engine.models import GraphFormat

logger = logging.getLogger(__name__)


def register_verify_command(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="Verify a lower-bound certificate")
    parser.add_argument("--input", "-i", required=True, help="Graph file")
    parser.add_argument("--format", choices=[f.value for f in GraphFormat], default=None)
    parser.add_argument("--tree", required=True, help="Tree file written by solve")
    parser.add_argument("--cert", required=True, help="Certificate JSON written by solve")
    parser.add_argument(
        "--explain", action="store_true", help="Print the numbers behind the bound as JSON"
    )
    parser.set_defaults(handler=handle_verify)


def handle_verify(args: argparse.Namespace) -> int:
    graph = load_graph(args.input, args.format)
    cert = load_certificate(args.cert)
    try:
        tree = load_tree(graph, args.tree)
        if args.explain:
            print(json.dumps(explain_certificate(graph, tree, cert), indent=2))
        else:
            print(verify_certificate(graph, tree, cert))
    except (CertificateError, TreeError) as e:
        logger.warning(f"❌ certificate rejected: {e}")
        print(f"rejected: {type(e).__name__}: {e}")
        return EXIT_REJECTED
    return EXIT_OK
