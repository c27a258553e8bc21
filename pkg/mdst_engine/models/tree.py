"""
Spanning tree state with incremental degree statistics
"""

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from mdst_engine.core.errors import (
    AlreadyTreeEdge,
    InvalidTree,
    NotOnCycle,
    SameVertex,
)
from mdst_engine.models.graph import Graph


@dataclass(frozen=True)
class TreePath:
    """Vertices of the unique tree path from `vertices[0]` to `vertices[-1]`"""

    vertices: tuple[int, ...]

    def __contains__(self, u: object) -> bool:
        return u in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.vertices, self.vertices[1:]))


class SpanningTree:
    """Mutable spanning tree over a Graph.

    Keeps per-vertex tree degree, a histogram of degrees and the maximum degree
    up to date under `swap_edge`, so N_k, |S_k| and d_k are O(Δ) queries.
    """

    def __init__(self, graph: Graph, edge_ids: Iterable[int]):
        n = graph.n
        self.graph = graph
        self.n = n
        self.in_tree = bytearray(graph.m)
        self.adjacency: list[dict[int, int]] = [{} for _ in range(n)]
        self.deg = [0] * n
        count = 0
        for eid in edge_ids:
            if self.in_tree[eid]:
                raise InvalidTree(f"edge {eid} listed twice")
            self.in_tree[eid] = 1
            u, v = graph.edges[eid]
            self.adjacency[u][v] = eid
            self.adjacency[v][u] = eid
            self.deg[u] += 1
            self.deg[v] += 1
            count += 1
        if count != n - 1:
            raise InvalidTree(f"expected {n - 1} tree edges, got {count}")
        self.histogram = [0] * (n + 1)
        for d in self.deg:
            self.histogram[d] += 1
        self.delta = max(self.deg) if n > 1 else 0
        self._dk_cache: dict[int, int] = {}

    # Construction helpers

    @classmethod
    def from_pairs(cls, graph: Graph, pairs: Iterable[tuple[int, int]]) -> "SpanningTree":
        """Build from vertex pairs; every pair must be a graph edge"""
        edge_ids = []
        for u, v in pairs:
            eid = graph.edge_id(u, v) if 0 <= u < graph.n and 0 <= v < graph.n else None
            if eid is None:
                raise InvalidTree(f"({u}, {v}) is not an edge of the graph")
            edge_ids.append(eid)
        tree = cls(graph, edge_ids)
        tree.validate()
        return tree

    def copy(self) -> "SpanningTree":
        return SpanningTree(self.graph, self.edge_ids())

    # Queries

    def edge_ids(self) -> list[int]:
        return [eid for eid in range(self.graph.m) if self.in_tree[eid]]

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [self.graph.edges[eid] for eid in self.edge_ids()]

    def n_k(self, k: int) -> int:
        """|N_k|: number of vertices of degree exactly k"""
        return self.histogram[k] if 0 <= k <= self.n else 0

    def s_k_size(self, k: int) -> int:
        """|S_k|: number of vertices of degree at least k"""
        return sum(self.histogram[max(k, 0) : self.delta + 1])

    def d_k(self, k: int) -> int:
        """d_k: total degree of the vertices of degree at least k"""
        cached = self._dk_cache.get(k)
        if cached is None:
            cached = sum(i * self.histogram[i] for i in range(max(k, 0), self.delta + 1))
            self._dk_cache[k] = cached
        return cached

    def s_k(self, k: int) -> list[int]:
        return [u for u in range(self.n) if self.deg[u] >= k]

    # Mutation

    def swap_edge(self, add: int, remove: int, check: bool = True) -> None:
        """
        Insert non-tree edge `add` and delete tree edge `remove`.

        Args:
            add: Edge id of a non-tree edge
            remove: Edge id of a tree edge on the cycle closed by `add`
            check: Verify the cycle condition with a naive path walk; callers
                that keep their own dynamic forest pass False

        Raises:
            AlreadyTreeEdge: `add` is already in the tree
            NotOnCycle: `remove` is not a tree edge on the closed cycle
        """
        if self.in_tree[add]:
            raise AlreadyTreeEdge(f"edge {add} is already a tree edge")
        if not self.in_tree[remove]:
            raise NotOnCycle(f"edge {remove} is not a tree edge")
        a, b = self.graph.edges[add]
        x, y = self.graph.edges[remove]
        if check:
            on_path = {frozenset(e) for e in tree_path(self, a, b).edges()}
            if frozenset((x, y)) not in on_path:
                raise NotOnCycle(f"edge {remove} ({x}, {y}) is not on the cycle of edge {add}")

        self.in_tree[remove] = 0
        del self.adjacency[x][y]
        del self.adjacency[y][x]
        self._shift(x, -1)
        self._shift(y, -1)

        self.in_tree[add] = 1
        self.adjacency[a][b] = add
        self.adjacency[b][a] = add
        self._shift(a, 1)
        self._shift(b, 1)
        self._dk_cache.clear()

    def _shift(self, u: int, step: int) -> None:
        hist = self.histogram
        hist[self.deg[u]] -= 1
        self.deg[u] += step
        hist[self.deg[u]] += 1
        if self.deg[u] > self.delta:
            self.delta = self.deg[u]
        while self.delta > 0 and hist[self.delta] == 0:
            self.delta -= 1

    # Validation

    def validate(self) -> None:
        """Recheck every tree invariant from scratch; raises InvalidTree"""
        n = self.n
        edge_ids = self.edge_ids()
        if len(edge_ids) != n - 1:
            raise InvalidTree(f"expected {n - 1} tree edges, got {len(edge_ids)}")
        seen = bytearray(n)
        seen[0] = 1
        queue = deque([0])
        reached = 1
        while queue:
            u = queue.popleft()
            for v in self.adjacency[u]:
                if not seen[v]:
                    seen[v] = 1
                    reached += 1
                    queue.append(v)
        if reached != n:
            raise InvalidTree(f"tree reaches {reached} of {n} vertices")
        deg = [len(row) for row in self.adjacency]
        if deg != self.deg:
            raise InvalidTree("degree array out of sync with tree adjacency")
        histogram = [0] * (n + 1)
        for d in deg:
            histogram[d] += 1
        if histogram != self.histogram:
            raise InvalidTree("degree histogram out of sync")
        if n > 1 and self.delta != max(deg):
            raise InvalidTree(f"cached delta {self.delta} != {max(deg)}")

    def __repr__(self) -> str:
        return f"<SpanningTree(n={self.n}, delta={self.delta})>"


def bfs_tree(graph: Graph, root: int = 0) -> SpanningTree:
    """Breadth-first spanning tree; deterministic given adjacency order"""
    if not 0 <= root < graph.n:
        raise ValueError(f"root {root} outside 0..{graph.n - 1}")
    seen = bytearray(graph.n)
    seen[root] = 1
    queue = deque([root])
    edge_ids: list[int] = []
    while queue:
        u = queue.popleft()
        for v, eid in graph.adjacency[u]:
            if not seen[v]:
                seen[v] = 1
                edge_ids.append(eid)
                queue.append(v)
    return SpanningTree(graph, edge_ids)


def tree_path(tree: SpanningTree, u: int, v: int) -> TreePath:
    """Unique tree path from u to v by breadth-first search, O(n)"""
    if u == v:
        raise SameVertex(f"path endpoints coincide ({u})")
    parent = {u: u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for y in tree.adjacency[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return TreePath(tuple(path))
