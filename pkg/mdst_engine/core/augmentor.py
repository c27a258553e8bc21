"""
Augmenting-sequence search and degree reduction for a fixed threshold k
"""

import logging
import time
from dataclasses import dataclass, field

from mdst_engine.core.errors import InvalidSequence, InvariantViolation, TimedOut
from mdst_engine.core.layering import LayeringState, build_layering
from mdst_engine.models.reports import DegRedReport, ModificationReport
from mdst_engine.models.tree import SpanningTree, tree_path

logger = logging.getLogger(__name__)


@dataclass
class AugmentingSequence:
    """
    Non-tree edges (w_1, z_1)..(w_l, z_l), oriented w side first, plus the
    anchor w_0 in S_k on the tree path of (w_1, z_1).
    """

    pairs: list[tuple[int, int]]
    edge_ids: list[int]
    anchor: int

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def ws(self) -> list[int]:
        """w_0..w_l"""
        return [self.anchor] + [w for w, _ in self.pairs]


@dataclass
class SequenceCheck:
    violations: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return not self.violations


@dataclass
class _Frame:
    level: int
    u: int
    v: int
    w: int | None = None


def _live_anchor(state: LayeringState, a: int, b: int) -> int | None:
    vertex, weight = state.forest.path_min_vertex(a, b)
    return vertex if weight == 0 else None


def _sequence(state: LayeringState, pairs: list[tuple[int, int]]) -> AugmentingSequence | None:
    w1, z1 = pairs[0]
    anchor = _live_anchor(state, w1, z1)
    if anchor is None:
        return None
    graph = state.graph
    edge_ids = []
    for w, z in pairs:
        eid = graph.edge_id(w, z)
        assert eid is not None
        edge_ids.append(eid)
    return AugmentingSequence(pairs=pairs, edge_ids=edge_ids, anchor=anchor)


def _next_layer_vertex(state: LayeringState, frame: _Frame) -> int | None:
    """Next untagged vertex of B_{level-1} on the tree path u..v"""
    vertex, weight = state.forest.path_min_vertex(frame.u, frame.v)
    target = frame.level - 1
    if weight == target:
        return vertex
    if weight > target:
        return None
    raise InvariantViolation(
        f"vertex {vertex} of weight {weight} on path {frame.u}..{frame.v} at level {frame.level}"
    )


def _next_partner(state: LayeringState, w: int, level: int) -> int | None:
    """Cross the next usable neighbour z of w off its list; None when exhausted"""
    adjacency = state.graph.adjacency[w]
    comps = state.components_at(level - 2)
    marked, layer_of = state.marked, state.layer_of
    while state.cursor[w] < len(adjacency):
        z, eid = adjacency[state.cursor[w]]
        state.cursor[w] += 1
        state.edge_tagged[eid] = 1
        if marked[z] or layer_of[z] <= level - 2:
            continue
        if comps.same_set(w, z):
            continue
        return z
    return None


def aug_dfs(state: LayeringState, i: int, edge: tuple[int, int]) -> AugmentingSequence | None:
    """
    Tagged depth-first search for an augmenting sequence ending with `edge`.

    Iterative: the search can be as deep as h_max. Vertices of B_{i-1} on the
    path are enumerated through path minima of the forest weights; exhausted
    vertices are tagged (weight h+1) and every scanned edge is crossed off.
    """
    u, v = edge
    if i == 1:
        return _sequence(state, [(u, v)])

    stack = [_Frame(i, u, v)]
    while stack:
        frame = stack[-1]
        if frame.w is None:
            frame.w = _next_layer_vertex(state, frame)
            if frame.w is None:
                stack.pop()
                continue
        z = _next_partner(state, frame.w, frame.level)
        if z is None:
            state.tag_vertex(frame.w)
            frame.w = None
            continue
        if frame.level == 2:
            pairs = [(frame.w, z)] + [(f.u, f.v) for f in reversed(stack)]
            found = _sequence(state, pairs)
            if found is not None:
                return found
            continue
        stack.append(_Frame(frame.level - 1, frame.w, z))
    return None


def validate_sequence(
    tree: SpanningTree, k: int, marked: bytearray, seq: AugmentingSequence
) -> SequenceCheck:
    """Check the augmenting-sequence definition with naive tree paths"""
    check = SequenceCheck()
    report = check.violations
    graph = tree.graph
    pairs = seq.pairs
    length = len(pairs)
    if length == 0:
        report.append("empty sequence")
        return check

    for idx, (w, z) in enumerate(pairs, start=1):
        eid = graph.edge_id(w, z) if w != z else None
        if eid is None:
            report.append(f"({w}, {z}) is not a graph edge")
            return check
        if tree.in_tree[eid]:
            report.append(f"edge {idx} ({w}, {z}) is a tree edge")
    endpoints = [x for pair in pairs for x in pair]
    if len(set(endpoints)) != len(endpoints):
        report.append("edges are not vertex-disjoint")
    if tree.deg[seq.anchor] < k:
        report.append(f"(i) anchor {seq.anchor} has degree {tree.deg[seq.anchor]} < {k}")

    for idx, (w, z) in enumerate(pairs, start=1):
        if marked[z]:
            report.append(f"(ii) z_{idx}={z} is marked")
        if idx < length and not marked[w]:
            report.append(f"(ii) w_{idx}={w} is unmarked")
        if idx == length and marked[w]:
            report.append(f"(ii) w_{length}={w} is marked")

    if report:
        return check
    paths = [tree_path(tree, w, z) for w, z in pairs]
    ws = seq.ws
    for i in range(length):
        if ws[i] not in paths[i]:
            report.append(f"(i) w_{i}={ws[i]} is not on the path of edge {i + 1}")
        for j in range(i + 2, length + 1):
            if ws[i] in paths[j - 1]:
                report.append(f"(i) w_{i}={ws[i]} lies on the path of edge {j}")
    return check


def apply_sequence(
    tree: SpanningTree,
    state: LayeringState,
    seq: AugmentingSequence,
    check_invariants: bool = False,
) -> ModificationReport:
    """
    Insert the sequence edges from the last one down, each time deleting the
    edge from w_i towards z_{i+1}; keeps the forest and the layer partitions
    in step with the tree.

    Raises:
        InvalidSequence: the sequence fails the definition
        InvariantViolation: d_k did not drop or S_k grew
    """
    k = state.k
    graph = tree.graph
    forest = state.forest
    marked = state.marked
    pairs = seq.pairs
    length = len(pairs)

    problems = []
    if length == 0:
        problems.append("empty sequence")
    if any(tree.in_tree[eid] for eid in seq.edge_ids):
        problems.append("sequence contains a tree edge")
    endpoints = [x for pair in pairs for x in pair]
    if len(set(endpoints)) != len(endpoints):
        problems.append("edges are not vertex-disjoint")
    if tree.deg[seq.anchor] < k:
        problems.append(f"anchor {seq.anchor} is not in S_k")
    if not problems and check_invariants:
        problems = validate_sequence(tree, k, marked, seq).violations
    if problems:
        raise InvalidSequence(problems[0], problems)

    d_before = tree.d_k(k)
    before = {}
    report = ModificationReport()
    ws = seq.ws
    for i in range(length - 1, -1, -1):
        w_next, z_next = pairs[i]
        x = forest.next_on_path(ws[i], z_next)
        removed = graph.edge_id(ws[i], x)
        added = seq.edge_ids[i]
        assert removed is not None
        for vertex in (ws[i], x, w_next, z_next):
            before.setdefault(vertex, tree.deg[vertex])
        forest.cut(ws[i], x)
        if forest.connected(w_next, z_next):
            raise InvariantViolation(f"edge ({ws[i]}, {x}) is not on the cycle of ({w_next}, {z_next})")
        forest.link(w_next, z_next)
        tree.swap_edge(added, removed, check=False)
        state.components_at(i).union(w_next, z_next)
        report.added_edges.append(added)
        report.removed_edges.append(removed)
        for vertex in (ws[i], x, w_next, z_next):
            if tree.deg[vertex] == k - 1 and not marked[vertex]:
                marked[vertex] = 1
                report.newly_marked.append(vertex)

    for vertex, old in before.items():
        new = tree.deg[vertex]
        if new != old:
            report.degree_deltas[vertex] = new - old
        if new >= k > old:
            raise InvariantViolation(f"vertex {vertex} joined S_{k} ({old} -> {new})")
        if new < k and state.layer_of[vertex] == 0:
            state.retire(vertex)
    d_after = tree.d_k(k)
    if d_after >= d_before:
        raise InvariantViolation(f"d_{k} did not decrease ({d_before} -> {d_after})")

    if check_invariants:
        tree.validate()
        state.check_components()
        if forest.edges != {(a, b) if a < b else (b, a) for a, b in tree.edge_pairs()}:
            raise InvariantViolation("forest edge set differs from the tree")
    logger.debug(f"applied length-{length} sequence at anchor {seq.anchor}: d_{k} {d_before} -> {d_after}")
    return report


def aug_seq_deg_red(
    tree: SpanningTree,
    k: int,
    eps: float,
    check_invariants: bool = False,
    deadline: float | None = None,
) -> DegRedReport:
    """
    Reduce d_k by augmenting sequences until the layering reaches h_max.

    Each repeat-iteration rebuilds the layering, clears tags, then scans edges
    in ascending id; an edge qualifies when it is a cross edge at scan time.
    The last layering is kept on the report for certificate construction.

    Raises:
        InvariantViolation: h failed to grow between two repeat-iterations
        TimedOut: `deadline` (a time.monotonic() value) passed
    """
    n = tree.n
    marked = bytearray(n)
    for u in range(n):
        if tree.deg[u] == k - 1:
            marked[u] = 1
    d_before = tree.d_k(k)
    report = DegRedReport(k=k, d_before=d_before, d_after=d_before)
    initially_marked = sum(marked)

    while True:
        if report.h_history and tree.d_k(k) == 0:
            break
        if deadline is not None and time.monotonic() > deadline:
            raise TimedOut(f"time limit hit during degree reduction at k={k}", tree)
        state = build_layering(tree, k, eps, marked)
        if report.h_history and state.h <= report.h_history[-1]:
            raise InvariantViolation(
                f"layering h did not grow: {report.h_history[-1]} -> {state.h}"
            )
        report.h_history.append(state.h)
        report.state = state
        state.untag_all()

        h = state.h
        for u, v in tree.graph.edges:
            if marked[u] or marked[v]:
                continue
            if state.layer_of[u] <= h or state.layer_of[v] <= h:
                continue
            if state.components_at(h).same_set(u, v):
                continue
            seq = aug_dfs(state, h + 1, (u, v))
            if seq is None:
                continue
            apply_sequence(tree, state, seq, check_invariants)
            report.modifications += 1
            report.d_history.append(tree.d_k(k))

        if state.is_terminal:
            break

    report.d_after = tree.d_k(k)
    if report.state is not None:
        report.terminal_layer_sizes = report.state.layer_sizes()
    report.marked_growth = sum(marked) - initially_marked
    logger.debug(
        f"degred k={k}: d_k {report.d_before} -> {report.d_after}, "
        f"{report.modifications} modifications, h trajectory {report.h_history}"
    )
    return report
