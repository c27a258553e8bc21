"""
Graph model and edge-list parsing
"""

from collections import deque
from collections.abc import Iterable, Sequence
from enum import Enum

import networkx as nx

from mdst_engine.core.errors import (
    BadHeader,
    Disconnected,
    DuplicateEdge,
    GraphFormatError,
    IdOutOfRange,
    SelfLoop,
)


class GraphFormat(str, Enum):
    """Input/output graph formats"""

    EDGE_LIST = "edge-list"  # bare "u v" lines, 0-based ids
    DIMACS = "dimacs"  # "p edge n m" header, "e u v" lines, 1-based ids


class Graph:
    """Immutable simple connected undirected graph.

    Edge ids are positions in `edges`; `adjacency[u]` lists `(neighbor, edge_id)`
    in edge-id order.
    """

    __slots__ = ("n", "edges", "adjacency", "_edge_index")

    def __init__(self, n: int, edges: Sequence[tuple[int, int]]):
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        index: dict[tuple[int, int], int] = {}
        for eid, (u, v) in enumerate(edges):
            adjacency[u].append((v, eid))
            adjacency[v].append((u, eid))
            index[(u, v) if u < v else (v, u)] = eid
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(edges)
        self.adjacency: tuple[tuple[tuple[int, int], ...], ...] = tuple(
            tuple(row) for row in adjacency
        )
        self._edge_index = index

    @property
    def m(self) -> int:
        return len(self.edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, enforcing every Graph invariant"""
        if n < 1:
            raise BadHeader(f"vertex count must be positive, got {n}")
        seen: set[tuple[int, int]] = set()
        checked: list[tuple[int, int]] = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IdOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop on vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdge(f"duplicate edge ({u}, {v})")
            seen.add(key)
            checked.append((u, v))
        graph = cls(n, checked)
        unreachable = graph.first_unreachable()
        if unreachable is not None:
            raise Disconnected(f"vertex {unreachable} is unreachable from vertex 0")
        return graph

    def edge_id(self, u: int, v: int) -> int | None:
        """Edge id of {u, v}, or None if absent"""
        return self._edge_index.get((u, v) if u < v else (v, u))

    def reached_from_zero(self) -> bytearray:
        """Flag per vertex: 1 when reachable from vertex 0"""
        seen = bytearray(self.n)
        seen[0] = 1
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v, _ in self.adjacency[u]:
                if not seen[v]:
                    seen[v] = 1
                    queue.append(v)
        return seen

    def first_unreachable(self) -> int | None:
        """Smallest vertex not reachable from 0, or None when connected"""
        seen = self.reached_from_zero()
        for u in range(self.n):
            if not seen[u]:
                return u
        return None

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def __repr__(self) -> str:
        return f"<Graph(n={self.n}, m={self.m})>"


def _ints(tokens: list[str], line_no: int) -> list[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise GraphFormatError(f"expected integers, got {' '.join(tokens)!r}", line_no)


def parse_graph(text: bytes | str, format: GraphFormat | None = None) -> Graph:
    """
    Parse a graph from edge-list or DIMACS text.

    Args:
        text: Raw input
        format: Input format; detected from the presence of a "p" header when None

    Returns:
        Graph with 0-based vertex ids

    Raises:
        GraphFormatError: SelfLoop, DuplicateEdge, Disconnected, BadHeader,
            IdOutOfRange or undecodable bytes, each naming the offending line.
            Disconnected names the first edge line outside the component of
            vertex 0, or no line when the cut-off vertices have no edges.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            line_no = text.count(b"\n", 0, e.start) + 1
            raise GraphFormatError(f"not valid UTF-8 ({e.reason})", line_no) from e
    lines = text.splitlines()

    if format is None:
        has_header = any(line.lstrip().startswith("p") for line in lines)
        format = GraphFormat.DIMACS if has_header else GraphFormat.EDGE_LIST

    if format is GraphFormat.DIMACS:
        n, edges, lines_of = _parse_dimacs(lines)
    else:
        n, edges, lines_of = _parse_bare(lines)

    seen: dict[tuple[int, int], int] = {}
    for (u, v), line_no in zip(edges, lines_of):
        if u == v:
            raise SelfLoop(f"self-loop on vertex {u}", line_no)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(
                f"edge ({u}, {v}) repeats line {seen[key]}", line_no
            )
        seen[key] = line_no

    graph = Graph(n, edges)
    unreachable = graph.first_unreachable()
    if unreachable is not None:
        reached = graph.reached_from_zero()
        offending = next(
            (line_no for (u, _), line_no in zip(edges, lines_of) if not reached[u]),
            None,
        )
        raise Disconnected(
            f"vertex {unreachable} is unreachable from vertex 0", offending
        )
    return graph


def _parse_dimacs(lines: list[str]) -> tuple[int, list[tuple[int, int]], list[int]]:
    n: int | None = None
    declared_m = 0
    header_line = 0
    edges: list[tuple[int, int]] = []
    lines_of: list[int] = []
    for line_no, raw in enumerate(lines, start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise BadHeader("second header line", line_no)
            if len(tokens) != 4 or tokens[1] != "edge":
                raise BadHeader(f"expected 'p edge <n> <m>', got {raw.strip()!r}", line_no)
            n, declared_m = _ints(tokens[2:], line_no)
            if n < 1 or declared_m < 0:
                raise BadHeader(f"invalid sizes n={n} m={declared_m}", line_no)
            header_line = line_no
            continue
        if tokens[0] == "e":
            if n is None:
                raise BadHeader("edge line before 'p edge' header", line_no)
            if len(tokens) != 3:
                raise GraphFormatError(f"expected 'e <u> <v>', got {raw.strip()!r}", line_no)
            u, v = _ints(tokens[1:], line_no)
            if not (1 <= u <= n and 1 <= v <= n):
                raise IdOutOfRange(f"edge ({u}, {v}) outside 1..{n}", line_no)
            edges.append((u - 1, v - 1))
            lines_of.append(line_no)
            continue
        raise GraphFormatError(f"unrecognised line {raw.strip()!r}", line_no)

    if n is None:
        raise BadHeader("missing 'p edge <n> <m>' header")
    if declared_m != len(edges):
        raise BadHeader(
            f"header declares m={declared_m} but {len(edges)} edges follow", header_line
        )
    return n, edges, lines_of


def _parse_bare(lines: list[str]) -> tuple[int, list[tuple[int, int]], list[int]]:
    edges: list[tuple[int, int]] = []
    lines_of: list[int] = []
    top = -1
    for line_no, raw in enumerate(lines, start=1):
        tokens = raw.split()
        if not tokens or tokens[0] in ("c", "#"):
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"expected '<u> <v>', got {raw.strip()!r}", line_no)
        u, v = _ints(tokens, line_no)
        if u < 0 or v < 0:
            raise IdOutOfRange(f"negative vertex id in ({u}, {v})", line_no)
        top = max(top, u, v)
        edges.append((u, v))
        lines_of.append(line_no)
    if top < 0:
        raise BadHeader("no edges and no header: vertex count unknown")
    return top + 1, edges, lines_of


def format_graph(graph: Graph, format: GraphFormat = GraphFormat.EDGE_LIST) -> str:
    """Serialise a graph in a format `parse_graph` reads back"""
    if format is GraphFormat.DIMACS:
        rows = [f"p edge {graph.n} {graph.m}"]
        rows.extend(f"e {u + 1} {v + 1}" for u, v in graph.edges)
    else:
        rows = [f"{u} {v}" for u, v in graph.edges]
    return "\n".join(rows) + "\n"
