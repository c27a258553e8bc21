"""
Graph generators, some with a known optimum tree degree
"""

import logging
from dataclasses import dataclass

import networkx as nx

from mdst_engine.core.errors import BadParams
from mdst_engine.core.rng import int_seed, stream
from mdst_engine.models.graph import Graph
from mdst_engine.models.reports import GenSpec, GraphKind

logger = logging.getLogger(__name__)

MAX_HYPERCUBE_DIM = 20


@dataclass
class GeneratedGraph:
    graph: Graph
    delta_star: int | None
    provenance: str


def _need(value, name: str, kind: GraphKind, low: float, high: float | None = None):
    if value is None:
        raise BadParams(f"{kind.value} needs {name}")
    if value < low or (high is not None and value > high):
        bound = f"[{low}, {high}]" if high is not None else f">= {low}"
        raise BadParams(f"{kind.value}: {name}={value} outside {bound}")
    return value


def _connect(graph: nx.Graph, seed: int) -> int:
    """Join components with random edges between consecutive ones; returns edges added"""
    components = sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0])
    rng = stream(seed, "gnp-connect")
    for left, right in zip(components, components[1:]):
        u = left[int(rng.integers(len(left)))]
        v = right[int(rng.integers(len(right)))]
        graph.add_edge(u, v)
    return len(components) - 1


def _ham_path_plus_edges(n: int, extra: int, seed: int) -> nx.Graph:
    rng = stream(seed, "ham-path")
    order = [int(x) for x in rng.permutation(n)]
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(zip(order, order[1:]))
    added = 0
    while added < extra:
        u, v = (int(x) for x in rng.integers(0, n, size=2))
        if u != v and not graph.has_edge(u, v):
            graph.add_edge(u, v)
            added += 1
    return graph


def _broom(n: int, bristles: int) -> nx.Graph:
    handle = n - bristles
    graph = nx.path_graph(handle)
    graph.add_edges_from((handle - 1, leaf) for leaf in range(handle, n))
    return graph


def generate(spec: GenSpec) -> GeneratedGraph:
    """
    Build the graph described by `spec`. Same spec, same edge list.

    Raises:
        BadParams: missing or out-of-range parameters
    """
    kind = spec.kind
    provenance = kind.value
    delta_star: int | None = None

    if kind is GraphKind.PATH:
        n = _need(spec.n, "n", kind, 2)
        graph = nx.path_graph(n)
        delta_star = min(n - 1, 2)
    elif kind is GraphKind.CYCLE:
        n = _need(spec.n, "n", kind, 3)
        graph = nx.cycle_graph(n)
        delta_star = 2
    elif kind is GraphKind.STAR:
        n = _need(spec.n, "n", kind, 2)
        graph = nx.star_graph(n - 1)
        delta_star = n - 1
    elif kind is GraphKind.COMPLETE:
        n = _need(spec.n, "n", kind, 2)
        graph = nx.complete_graph(n)
        delta_star = min(n - 1, 2)
    elif kind is GraphKind.GNP:
        n = _need(spec.n, "n", kind, 1)
        p = _need(spec.p, "p", kind, 0.0, 1.0)
        graph = nx.fast_gnp_random_graph(n, p, seed=int_seed(spec.seed, "gnp"))
        added = _connect(graph, spec.seed)
        provenance = f"gnp: added {added} edges to connect" if added else "gnp: connected as drawn"
    elif kind is GraphKind.HYPERCUBE:
        d = _need(spec.d, "d", kind, 1, MAX_HYPERCUBE_DIM)
        graph = nx.convert_node_labels_to_integers(nx.hypercube_graph(d), ordering="sorted")
        delta_star = min(d, 2)
    elif kind is GraphKind.WHEEL:
        n = _need(spec.n, "n", kind, 4)
        graph = nx.wheel_graph(n)
        delta_star = 2
    elif kind is GraphKind.HAM_PATH_PLUS_EDGES:
        n = _need(spec.n, "n", kind, 3)
        room = n * (n - 1) // 2 - (n - 1)
        extra = _need(spec.extra, "extra", kind, 0, room)
        graph = _ham_path_plus_edges(n, extra, spec.seed)
        delta_star = 2
    elif kind is GraphKind.BROOM:
        n = _need(spec.n, "n", kind, 3)
        bristles = _need(spec.d, "d", kind, 1, n - 2)
        graph = _broom(n, bristles)
        delta_star = max(d for _, d in graph.degree())
    else:
        raise BadParams(f"unknown graph kind {kind!r}")

    edges = sorted((min(u, v), max(u, v)) for u, v in graph.edges())
    result = Graph.from_edges(graph.number_of_nodes(), edges)
    logger.debug(f"generated {provenance}: n={result.n}, m={result.m}")
    return GeneratedGraph(graph=result, delta_star=delta_star, provenance=provenance)
