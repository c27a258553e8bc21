"""
Plain local search, kept only as a comparison baseline
"""

import logging

from mdst_engine.models.graph import Graph
from mdst_engine.models.tree import SpanningTree, bfs_tree, tree_path

logger = logging.getLogger(__name__)


def _improving_swap(tree: SpanningTree, k: int) -> tuple[int, int] | None:
    """(added, removed) edge ids of the first move that takes a degree off S_k"""
    graph = tree.graph
    deg = tree.deg
    for eid, (u, v) in enumerate(graph.edges):
        if tree.in_tree[eid] or deg[u] > k - 2 or deg[v] > k - 2:
            continue
        path = tree_path(tree, u, v).vertices
        for idx in range(1, len(path) - 1):
            if deg[path[idx]] >= k:
                removed = graph.edge_id(path[idx], path[idx + 1])
                assert removed is not None
                return eid, removed
    return None


def local_search_baseline(graph: Graph, tree: SpanningTree | None = None) -> SpanningTree:
    """
    Swap in non-tree edges between vertices of degree <= k-2 whose tree cycle
    passes a vertex of degree >= k, for k from Δ down to 3, until no move is left.

    No approximation guarantee; every move lowers the degree sequence
    lexicographically, so the loop ends.
    """
    tree = tree.copy() if tree is not None else bfs_tree(graph, 0)
    start = tree.delta
    moves = 0
    while True:
        move = None
        for k in range(tree.delta, 2, -1):
            move = _improving_swap(tree, k)
            if move is not None:
                break
        if move is None:
            break
        tree.swap_edge(*move)
        moves += 1
    logger.debug(f"baseline: Δ {start} -> {tree.delta} in {moves} moves")
    return tree
