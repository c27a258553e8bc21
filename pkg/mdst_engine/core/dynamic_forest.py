"""
Dynamic forest with vertex weights and path-minimum queries.

`DynamicForest` is an array-backed link-cut tree (splay trees over preferred
paths, lazy reversal for rerooting). `NaiveForest` stores the forest
explicitly and walks paths; it ships as the differential twin.
"""

from collections import deque
from collections.abc import Iterable, Sequence

from mdst_engine.core.errors import NotAForestEdge, NotConnected, WouldCreateCycle

NIL = -1


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class DynamicForest:
    """
    Link-cut tree over vertices 0..n-1.

    Every vertex carries a small non-negative integer weight. The splay
    aggregate is the minimum of `weight * n + vertex`, so a path minimum
    resolves ties towards the smallest vertex id.
    """

    def __init__(self, n: int, weights: Sequence[int] | None = None):
        self.n = n
        self.left = [NIL] * n
        self.right = [NIL] * n
        self.par = [NIL] * n
        self.rev = bytearray(n)
        if weights is None:
            self.key = list(range(n))
        else:
            self.key = [w * n + u for u, w in enumerate(weights)]
        self.agg = list(self.key)
        self.edges: set[tuple[int, int]] = set()

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], weights: Sequence[int] | None = None
    ) -> "DynamicForest":
        """Build in O(n): every vertex starts as its own splay tree whose
        path-parent is its parent in a BFS rooting of the given forest."""
        forest = cls(n, weights)
        adjacency: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
            forest.edges.add(_edge_key(u, v))
        seen = bytearray(n)
        for root in range(n):
            if seen[root]:
                continue
            seen[root] = 1
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for v in adjacency[u]:
                    if not seen[v]:
                        seen[v] = 1
                        forest.par[v] = u
                        queue.append(v)
        return forest

    # Splay tree internals

    def _is_root(self, x: int) -> bool:
        p = self.par[x]
        return p == NIL or (self.left[p] != x and self.right[p] != x)

    def _push(self, x: int) -> None:
        if self.rev[x]:
            left, right = self.left, self.right
            left[x], right[x] = right[x], left[x]
            if left[x] != NIL:
                self.rev[left[x]] ^= 1
            if right[x] != NIL:
                self.rev[right[x]] ^= 1
            self.rev[x] = 0

    def _update(self, x: int) -> None:
        best = self.key[x]
        child = self.left[x]
        if child != NIL and self.agg[child] < best:
            best = self.agg[child]
        child = self.right[x]
        if child != NIL and self.agg[child] < best:
            best = self.agg[child]
        self.agg[x] = best

    def _rotate(self, x: int) -> None:
        left, right, par = self.left, self.right, self.par
        p = par[x]
        g = par[p]
        p_was_root = self._is_root(p)
        if left[p] == x:
            left[p] = right[x]
            if right[x] != NIL:
                par[right[x]] = p
            right[x] = p
        else:
            right[p] = left[x]
            if left[x] != NIL:
                par[left[x]] = p
            left[x] = p
        if not p_was_root:
            if left[g] == p:
                left[g] = x
            else:
                right[g] = x
        par[p] = x
        par[x] = g
        self._update(p)
        self._update(x)

    def _splay(self, x: int) -> None:
        chain = [x]
        y = x
        while not self._is_root(y):
            y = self.par[y]
            chain.append(y)
        for y in reversed(chain):
            self._push(y)
        left, par = self.left, self.par
        while not self._is_root(x):
            p = par[x]
            if not self._is_root(p):
                g = par[p]
                if (left[g] == p) == (left[p] == x):
                    self._rotate(p)
                else:
                    self._rotate(x)
            self._rotate(x)

    def _access(self, x: int) -> None:
        last = NIL
        y = x
        while y != NIL:
            self._splay(y)
            self.right[y] = last
            self._update(y)
            last = y
            y = self.par[y]
        self._splay(x)

    def _make_root(self, x: int) -> None:
        self._access(x)
        self.rev[x] ^= 1
        self._push(x)

    def _find_root(self, x: int) -> int:
        self._access(x)
        root = x
        self._push(root)
        while self.left[root] != NIL:
            root = self.left[root]
            self._push(root)
        self._splay(root)
        return root

    # Public operations

    def connected(self, u: int, v: int) -> bool:
        return u == v or self._find_root(u) == self._find_root(v)

    def link(self, u: int, v: int) -> None:
        if self.connected(u, v):
            raise WouldCreateCycle(f"{u} and {v} are already connected")
        self._make_root(u)
        self.par[u] = v
        self.edges.add(_edge_key(u, v))

    def cut(self, u: int, v: int) -> None:
        key = _edge_key(u, v)
        if key not in self.edges:
            raise NotAForestEdge(f"({u}, {v}) is not a forest edge")
        self._make_root(u)
        self._access(v)
        # path is exactly u, v: u is v's left child with no children of its own
        self.left[v] = NIL
        self.par[u] = NIL
        self._update(v)
        self.edges.discard(key)

    def weight(self, u: int) -> int:
        return self.key[u] // self.n

    def set_weight(self, u: int, w: int) -> None:
        if w < 0:
            raise ValueError(f"weight must be non-negative, got {w}")
        self._access(u)
        self.key[u] = w * self.n + u
        self._update(u)

    def path_min_vertex(self, u: int, v: int) -> tuple[int, int]:
        """Minimum-weight vertex on the path u..v (ends included), smallest id on ties"""
        if u == v:
            return u, self.weight(u)
        if not self.connected(u, v):
            raise NotConnected(f"{u} and {v} are in different trees")
        self._make_root(u)
        self._access(v)
        best = self.agg[v]
        return best % self.n, best // self.n

    def next_on_path(self, src: int, dst: int) -> int:
        """Neighbour of `src` on the path towards `dst`"""
        if src == dst or not self.connected(src, dst):
            raise NotConnected(f"no path leaving {src} towards {dst}")
        self._make_root(dst)
        self._access(src)
        # src is the deepest vertex: its in-order predecessor is the answer
        x = self.left[src]
        self._push(x)
        while self.right[x] != NIL:
            x = self.right[x]
            self._push(x)
        self._splay(x)
        return x


class NaiveForest:
    """Explicit adjacency forest with the same contract as DynamicForest"""

    def __init__(self, n: int, weights: Sequence[int] | None = None):
        self.n = n
        self.adjacency: list[set[int]] = [set() for _ in range(n)]
        self.weights = list(weights) if weights is not None else [0] * n

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], weights: Sequence[int] | None = None
    ) -> "NaiveForest":
        forest = cls(n, weights)
        for u, v in edges:
            forest.link(u, v)
        return forest

    @property
    def edges(self) -> set[tuple[int, int]]:
        return {_edge_key(u, v) for u in range(self.n) for v in self.adjacency[u]}

    def _parents_from(self, u: int) -> dict[int, int]:
        parent = {u: u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in self.adjacency[x]:
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
        return parent

    def _path(self, u: int, v: int) -> list[int]:
        parent = self._parents_from(u)
        if v not in parent:
            raise NotConnected(f"{u} and {v} are in different trees")
        path = [v]
        while path[-1] != u:
            path.append(parent[path[-1]])
        path.reverse()
        return path

    def connected(self, u: int, v: int) -> bool:
        return v in self._parents_from(u)

    def link(self, u: int, v: int) -> None:
        if self.connected(u, v):
            raise WouldCreateCycle(f"{u} and {v} are already connected")
        self.adjacency[u].add(v)
        self.adjacency[v].add(u)

    def cut(self, u: int, v: int) -> None:
        if v not in self.adjacency[u]:
            raise NotAForestEdge(f"({u}, {v}) is not a forest edge")
        self.adjacency[u].discard(v)
        self.adjacency[v].discard(u)

    def weight(self, u: int) -> int:
        return self.weights[u]

    def set_weight(self, u: int, w: int) -> None:
        if w < 0:
            raise ValueError(f"weight must be non-negative, got {w}")
        self.weights[u] = w

    def path_min_vertex(self, u: int, v: int) -> tuple[int, int]:
        best = min(self._path(u, v), key=lambda x: (self.weights[x], x))
        return best, self.weights[best]

    def next_on_path(self, src: int, dst: int) -> int:
        if src == dst:
            raise NotConnected(f"no path leaving {src} towards {dst}")
        return self._path(src, dst)[1]
