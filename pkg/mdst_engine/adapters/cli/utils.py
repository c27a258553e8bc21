"""
CLI helpers: exit codes, file IO and plain-text rendering
"""

import sys
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from mdst_engine.models import Graph, GraphFormat, LowerBoundCertificate, parse_graph
from mdst_engine.models.tree import SpanningTree

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_INPUT = 2
EXIT_FLAGS = 3


class InputError(Exception):
    """Unreadable or malformed input file (exit code 2)"""


def read_text(path: str) -> str:
    """Read a whole UTF-8 file; '-' means stdin"""
    try:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}") from e
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line_no = data.count(b"\n", 0, e.start) + 1
        raise InputError(f"{path}, line {line_no}: not valid UTF-8 ({e.reason})") from e


def write_text(path: str, text: str) -> None:
    """Write a whole file; '-' means stdout"""
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot write {path}: {e.strerror or e}") from e


def load_graph(path: str, format: str | None = None) -> Graph:
    return parse_graph(read_text(path), GraphFormat(format) if format else None)


def load_tree(graph: Graph, path: str) -> SpanningTree:
    """
    Read a tree file: one 0-based "u v" pair per line, '#' and 'c' lines skipped.

    Raises:
        InputError: a line is not two integers
        InvalidTree: the pairs are not a spanning tree of `graph`
    """
    pairs = []
    for line_no, raw in enumerate(read_text(path).splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] in ("#", "c"):
            continue
        try:
            u, v = (int(tok) for tok in tokens)
        except ValueError:
            raise InputError(f"{path}, line {line_no}: expected '<u> <v>', got {raw.strip()!r}")
        pairs.append((u, v))
    return SpanningTree.from_pairs(graph, pairs)


def format_tree(tree: SpanningTree) -> str:
    return "".join(f"{u} {v}\n" for u, v in tree.edge_pairs())


def load_certificate(path: str) -> LowerBoundCertificate:
    try:
        return LowerBoundCertificate.model_validate_json(read_text(path))
    except ValidationError as e:
        raise InputError(f"{path}: not a certificate document ({e.error_count()} errors)") from e


def render_table(values: dict[str, Any]) -> str:
    """Aligned "key  value" lines; None shows as '-'"""
    width = max(len(key) for key in values)
    return "".join(
        f"{key:<{width}}  {'-' if value is None else value}\n" for key, value in values.items()
    )
