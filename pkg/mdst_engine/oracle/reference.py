"""
Naive degree reduction for differential testing.

Recomputes layers, layer components and tree paths from scratch wherever the
fast path keeps incremental state, but follows the same tie-breaks: edges in
ascending id, the smallest untagged layer vertex on a path, partners in
adjacency order, the smallest live anchor.
"""

import logging

from mdst_engine.core.disjoint_sets import DisjointSets
from mdst_engine.core.errors import EmptySk, InvariantViolation, ThresholdTooSmall
from mdst_engine.core.layering import UNLAYERED, layer_cap, layer_components
from mdst_engine.models.reports import DegRedReport
from mdst_engine.models.tree import SpanningTree, tree_path

logger = logging.getLogger(__name__)


class _Layers:
    def __init__(self, tree: SpanningTree, k: int, eps: float, marked: bytearray):
        n = tree.n
        self.h_max = layer_cap(n, eps)
        self.layer_of = [UNLAYERED] * n
        self.layers = [tree.s_k(k)]
        for u in self.layers[0]:
            self.layer_of[u] = 0
        self.h = 0
        edges = tree.graph.edges
        while self.h < self.h_max:
            comps = layer_components(tree, self.layer_of, self.h)
            if any(self._open(u, v, marked, comps, self.h) for u, v in edges):
                break
            grown = set()
            for u, v in edges:
                if self.layer_of[u] <= self.h or self.layer_of[v] <= self.h:
                    continue
                if marked[u] != marked[v] and not comps.same_set(u, v):
                    grown.add(u if marked[u] else v)
            if not grown:
                self.h = self.h_max
                break
            for u in grown:
                self.layer_of[u] = self.h + 1
            self.layers.append(sorted(grown))
            self.h += 1

    def _open(self, u: int, v: int, marked: bytearray, comps: DisjointSets, j: int) -> bool:
        if marked[u] or marked[v] or self.layer_of[u] <= j or self.layer_of[v] <= j:
            return False
        return not comps.same_set(u, v)


class _ReferenceRun:
    def __init__(self, tree: SpanningTree, k: int, marked: bytearray, layers: _Layers):
        self.tree = tree
        self.k = k
        self.marked = marked
        self.layers = layers
        self.tagged: set[int] = set()
        self.cursor = [0] * tree.n
        self._comps: dict[int, DisjointSets] = {}

    def comps(self, j: int) -> DisjointSets:
        if j not in self._comps:
            self._comps[j] = layer_components(self.tree, self.layers.layer_of, j)
        return self._comps[j]

    def anchor(self, u: int, v: int) -> int | None:
        live = [
            x
            for x in tree_path(self.tree, u, v).vertices
            if self.layers.layer_of[x] == 0 and self.tree.deg[x] >= self.k
        ]
        return min(live) if live else None

    def layer_vertex(self, u: int, v: int, level: int) -> int | None:
        found = [
            x
            for x in tree_path(self.tree, u, v).vertices
            if self.layers.layer_of[x] == level - 1 and x not in self.tagged
        ]
        return min(found) if found else None

    def partner(self, w: int, level: int) -> int | None:
        adjacency = self.tree.graph.adjacency[w]
        layer_of = self.layers.layer_of
        while self.cursor[w] < len(adjacency):
            z, _ = adjacency[self.cursor[w]]
            self.cursor[w] += 1
            if self.marked[z] or layer_of[z] <= level - 2:
                continue
            if self.comps(level - 2).same_set(w, z):
                continue
            return z
        return None

    def search(
        self, level: int, u: int, v: int, outer: list[tuple[int, int]]
    ) -> tuple[list[tuple[int, int]], int] | None:
        here = [(u, v)] + outer
        if level == 1:
            anchor = self.anchor(u, v)
            return (here, anchor) if anchor is not None else None
        while True:
            w = self.layer_vertex(u, v, level)
            if w is None:
                return None
            while (z := self.partner(w, level)) is not None:
                if level == 2:
                    anchor = self.anchor(w, z)
                    if anchor is not None:
                        return [(w, z)] + here, anchor
                    continue
                found = self.search(level - 1, w, z, here)
                if found is not None:
                    return found
            self.tagged.add(w)

    def apply(self, pairs: list[tuple[int, int]], anchor: int) -> None:
        tree = self.tree
        graph = tree.graph
        ws = [anchor] + [w for w, _ in pairs]
        for i in range(len(pairs) - 1, -1, -1):
            w_next, z_next = pairs[i]
            x = tree_path(tree, ws[i], z_next).vertices[1]
            added = graph.edge_id(w_next, z_next)
            removed = graph.edge_id(ws[i], x)
            assert added is not None and removed is not None
            tree.swap_edge(added, removed)
            for vertex in (ws[i], x, w_next, z_next):
                if tree.deg[vertex] == self.k - 1:
                    self.marked[vertex] = 1
        self._comps.clear()


def reference_degred(tree: SpanningTree, k: int, eps: float) -> DegRedReport:
    """
    Same contract and trajectory as `aug_seq_deg_red`, computed the slow way.
    Mutates `tree`; the report carries no layering state.
    """
    if k < 3:
        raise ThresholdTooSmall(f"k must be at least 3, got {k}")
    if tree.d_k(k) == 0:
        raise EmptySk(f"no vertex has tree degree >= {k}")

    marked = bytearray(tree.n)
    for u in range(tree.n):
        if tree.deg[u] == k - 1:
            marked[u] = 1
    initially_marked = sum(marked)
    d_before = tree.d_k(k)
    report = DegRedReport(k=k, d_before=d_before, d_after=d_before)
    layers: _Layers | None = None

    while True:
        if report.h_history and tree.d_k(k) == 0:
            break
        layers = _Layers(tree, k, eps, marked)
        if report.h_history and layers.h <= report.h_history[-1]:
            raise InvariantViolation(f"layering h did not grow: {report.h_history[-1]} -> {layers.h}")
        report.h_history.append(layers.h)
        run = _ReferenceRun(tree, k, marked, layers)
        h = layers.h
        for u, v in tree.graph.edges:
            if marked[u] or marked[v]:
                continue
            if layers.layer_of[u] <= h or layers.layer_of[v] <= h:
                continue
            if run.comps(h).same_set(u, v):
                continue
            found = run.search(h + 1, u, v, [])
            if found is None:
                continue
            run.apply(*found)
            report.modifications += 1
            report.d_history.append(tree.d_k(k))
        if layers.h >= layers.h_max:
            break

    report.d_after = tree.d_k(k)
    if layers is not None:
        report.terminal_layer_sizes = [len(layer) for layer in layers.layers]
    report.marked_growth = sum(marked) - initially_marked
    logger.debug(f"reference degred k={k}: d_k {d_before} -> {report.d_after}")
    return report
