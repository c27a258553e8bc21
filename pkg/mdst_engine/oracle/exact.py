"""
Exact minimum tree degree by branch and bound over spanning trees
"""

import logging

import numpy as np

from mdst_engine.config.settings import settings
from mdst_engine.core.errors import TooLarge
from mdst_engine.models.graph import Graph
from mdst_engine.models.tree import SpanningTree, bfs_tree

logger = logging.getLogger(__name__)


def spanning_tree_count(graph: Graph) -> int:
    """Number of spanning trees (determinant of a reduced Laplacian)"""
    n = graph.n
    if n == 1:
        return 1
    laplacian = np.zeros((n, n))
    for u, v in graph.edges:
        laplacian[u, u] += 1
        laplacian[v, v] += 1
        laplacian[u, v] -= 1
        laplacian[v, u] -= 1
    return int(round(np.linalg.det(laplacian[1:, 1:])))


def _find(parent: list[int], a: int) -> int:
    while parent[a] != a:
        a = parent[a]
    return a


def _still_connectable(graph: Graph, chosen: list[int], start: int) -> bool:
    """Can the chosen edges plus edges start.. still span the graph?"""
    parent = list(range(graph.n))
    parts = graph.n
    for eid in chosen + list(range(start, graph.m)):
        u, v = graph.edges[eid]
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[ru] = rv
            parts -= 1
    return parts == 1


class _Search:
    def __init__(self, graph: Graph, upper: SpanningTree):
        self.graph = graph
        self.n = graph.n
        self.floor = 1 if graph.n == 2 else 2
        self.best = upper.delta
        self.best_edges = upper.edge_ids()
        self.deg = [0] * graph.n
        self.chosen: list[int] = []
        self.nodes = 0

    def done(self) -> bool:
        return self.best <= self.floor

    def run(self, eid: int, parent: list[int]) -> None:
        self.nodes += 1
        if len(self.chosen) == self.n - 1:
            top = max(self.deg)
            if top < self.best:
                self.best = top
                self.best_edges = list(self.chosen)
            return
        if eid >= self.graph.m or self.done():
            return

        u, v = self.graph.edges[eid]
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv and self.deg[u] + 1 < self.best and self.deg[v] + 1 < self.best:
            merged = list(parent)
            merged[ru] = rv
            self.deg[u] += 1
            self.deg[v] += 1
            self.chosen.append(eid)
            self.run(eid + 1, merged)
            self.chosen.pop()
            self.deg[u] -= 1
            self.deg[v] -= 1
            if self.done():
                return
        if _still_connectable(self.graph, self.chosen, eid + 1):
            self.run(eid + 1, parent)


def exact_mdst(
    graph: Graph, max_n: int | None = None, max_trees: int | None = None
) -> tuple[int, SpanningTree]:
    """
    Minimum over spanning trees of the maximum tree degree, with one optimal tree.

    Include/exclude search over edges in id order; a branch is dropped when a
    degree would reach the best value found so far or when the remaining edges
    can no longer connect the graph. Stops early at the trivial floor.

    Raises:
        TooLarge: n above the cap, or more than `max_trees` spanning trees
    """
    cap = max_n if max_n is not None else settings.oracle.exact_max_n
    if graph.n > cap:
        raise TooLarge(f"exact search is capped at n={cap}, got n={graph.n}")
    if max_trees is not None:
        count = spanning_tree_count(graph)
        if count > max_trees:
            raise TooLarge(f"{count} spanning trees exceed the limit of {max_trees}")
    upper = bfs_tree(graph, 0)
    if graph.n <= 2:
        return upper.delta, upper

    search = _Search(graph, upper)
    if not search.done():
        search.run(0, list(range(graph.n)))
    logger.debug(f"exact search: Δ*={search.best} after {search.nodes} nodes")
    return search.best, SpanningTree(graph, search.best_edges)
