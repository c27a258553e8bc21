"""
Layering of the current tree around S_k.

B_0 = S_k; B_{h+1} collects marked vertices that touch an unmarked vertex of a
different component of T minus (B_0..B_h). The layering stops as soon as two
unmarked vertices of different components are adjacent (a cross edge), or once
h reaches h_max.
"""

import logging
import math
from collections.abc import Iterator

from mdst_engine.core.disjoint_sets import DisjointSets
from mdst_engine.core.dynamic_forest import DynamicForest
from mdst_engine.core.errors import EmptySk, InvariantViolation, ThresholdTooSmall
from mdst_engine.models.tree import SpanningTree

logger = logging.getLogger(__name__)

# layer index of vertices that belong to no B_i
UNLAYERED = 1 << 30


def layer_cap(n: int, eps: float) -> int:
    """h_max = ceil(1 + ln n / ln(1 + eps))"""
    return math.ceil(1 + math.log(n) / math.log1p(eps))


def layer_components(tree: SpanningTree, layer_of: list[int], j: int) -> DisjointSets:
    """Components of T minus (B_0..B_j); removed vertices stay singletons"""
    sets = DisjointSets(tree.n)
    for eid in tree.edge_ids():
        u, v = tree.graph.edges[eid]
        if layer_of[u] > j and layer_of[v] > j:
            sets.union(u, v)
    return sets


class LayeringState:
    """One repeat-iteration of degree reduction: layers, components, tags and the forest"""

    def __init__(
        self,
        tree: SpanningTree,
        k: int,
        eps: float,
        marked: bytearray,
        layers: list[list[int]],
        layer_of: list[int],
        components: list[DisjointSets],
        h: int,
        h_max: int,
    ):
        self.tree = tree
        self.graph = tree.graph
        self.k = k
        self.eps = eps
        self.marked = marked
        self.layers = layers
        self.layer_of = layer_of
        self.components = components
        self.h = h
        self.h_max = h_max
        self.vertex_tagged = bytearray(tree.n)
        self.edge_tagged = bytearray(tree.graph.m)
        self.cursor = [0] * tree.n
        self.forest = DynamicForest.from_edges(
            tree.n, tree.edge_pairs(), [self.base_weight(u) for u in range(tree.n)]
        )

    @property
    def last_layer(self) -> int:
        """Index of the last layer that was actually computed"""
        return len(self.layers) - 1

    @property
    def is_terminal(self) -> bool:
        return self.h >= self.h_max

    def layer(self, i: int) -> list[int]:
        """B_i; layers past the last computed one are empty"""
        return self.layers[i] if 0 <= i <= self.last_layer else []

    def layer_sizes(self) -> list[int]:
        return [len(layer) for layer in self.layers]

    def components_at(self, i: int) -> DisjointSets:
        """Layer-i partition; empty trailing layers share the last computed one"""
        return self.components[min(i, len(self.components) - 1)]

    def base_weight(self, u: int) -> int:
        layer = self.layer_of[u]
        return layer if layer <= self.h else self.h + 1

    def untag_all(self) -> None:
        for u in range(self.tree.n):
            if self.vertex_tagged[u]:
                self.forest.set_weight(u, self.base_weight(u))
        self.vertex_tagged = bytearray(self.tree.n)
        self.edge_tagged = bytearray(self.graph.m)
        self.cursor = [0] * self.tree.n

    def tag_vertex(self, u: int) -> None:
        self.vertex_tagged[u] = 1
        self.forest.set_weight(u, self.h + 1)

    def retire(self, u: int) -> None:
        """Drop a B_0 vertex that left S_k from anchor candidates"""
        self.forest.set_weight(u, self.h + 1)

    # Diagnostics

    def check_components(self) -> None:
        """Compare every incremental layer partition against a from-scratch one"""
        for j in range(len(self.components)):
            fresh = layer_components(self.tree, self.layer_of, j)
            kept = self.components[j]
            members = [u for u in range(self.tree.n) if self.layer_of[u] > j]
            if _partition(fresh, members) != _partition(kept, members):
                raise InvariantViolation(f"layer {j} components drifted from the tree")

    def blocking_violations(self) -> list[tuple[int, int, int]]:
        """(i, u, v) triples breaking the blocking property for 1 <= i < h"""
        found = []
        top = min(self.h, self.last_layer + 1)
        for i in range(1, top):
            comps = self.components_at(i)
            for u, v in self.graph.edges:
                if self.layer_of[u] <= i or self.layer_of[v] <= i:
                    continue
                if comps.same_set(u, v):
                    continue
                for a, b in ((u, v), (v, u)):
                    if not self.marked[a] and self.layer_of[b] != i + 1:
                        found.append((i, a, b))
        return found

    def cross_edges(self) -> Iterator[int]:
        """Edges whose endpoints are unmarked, unlayered and in different layer-h components"""
        comps = self.components_at(self.h)
        for eid, (u, v) in enumerate(self.graph.edges):
            if is_cross_edge(u, v, self.marked, self.layer_of, comps, self.h):
                yield eid

    def __repr__(self) -> str:
        return f"<LayeringState(k={self.k}, h={self.h}, h_max={self.h_max}, layers={self.layer_sizes()})>"


def _partition(sets: DisjointSets, members: list[int]) -> set[frozenset[int]]:
    groups: dict[int, set[int]] = {}
    for u in members:
        groups.setdefault(sets.find(u), set()).add(u)
    return {frozenset(g) for g in groups.values()}


def is_cross_edge(
    u: int, v: int, marked: bytearray, layer_of: list[int], comps: DisjointSets, h: int
) -> bool:
    if marked[u] or marked[v]:
        return False
    if layer_of[u] <= h or layer_of[v] <= h:
        return False
    return not comps.same_set(u, v)


def build_layering(
    tree: SpanningTree, k: int, eps: float, marked: bytearray
) -> LayeringState:
    """
    Compute B_0..B_h for threshold k.

    Returns a state whose h is the shortest augmenting-sequence length minus one
    when a cross edge exists below h_max; otherwise h >= h_max and the state is
    terminal. An empty B_{h+1} jumps straight to h_max.

    Raises:
        ThresholdTooSmall: k < 3
        EmptySk: no vertex has degree >= k
    """
    if k < 3:
        raise ThresholdTooSmall(f"k must be at least 3, got {k}")
    s_k = tree.s_k(k)
    if not s_k:
        raise EmptySk(f"no vertex has tree degree >= {k}")

    n = tree.n
    graph = tree.graph
    h_max = layer_cap(n, eps)
    layer_of = [UNLAYERED] * n
    for u in s_k:
        layer_of[u] = 0
    layers = [s_k]
    components: list[DisjointSets] = []
    h = 0
    while h < h_max:
        comps = layer_components(tree, layer_of, h)
        components.append(comps)
        if any(is_cross_edge(u, v, marked, layer_of, comps, h) for u, v in graph.edges):
            break
        next_layer = set()
        for u, v in graph.edges:
            if layer_of[u] <= h or layer_of[v] <= h or marked[u] == marked[v]:
                continue
            if not comps.same_set(u, v):
                next_layer.add(u if marked[u] else v)
        if not next_layer:
            h = h_max
            break
        for u in next_layer:
            layer_of[u] = h + 1
        layers.append(sorted(next_layer))
        h += 1
    if len(components) < len(layers):
        components.append(layer_components(tree, layer_of, len(layers) - 1))

    logger.debug(f"layering k={k}: h={h} (cap {h_max}), sizes {[len(b) for b in layers]}")
    return LayeringState(tree, k, eps, marked, layers, layer_of, components, h, h_max)
