"""
Lower-bound certificates: construction from a terminal layering and an
independent verifier that trusts nothing but the graph and the tree.
"""

import logging
from collections import deque
from collections.abc import Collection
from fractions import Fraction
from typing import Any

from mdst_engine.core.errors import (
    BoundOverclaimed,
    ComponentNotConnected,
    ComponentsOverlap,
    InvalidTree,
    InvariantViolation,
    MalformedCertificate,
    NotTerminal,
    UncoveredBoundaryEdge,
)
from mdst_engine.core.layering import LayeringState
from mdst_engine.models.certificate import LowerBoundCertificate
from mdst_engine.models.graph import Graph
from mdst_engine.models.tree import SpanningTree

logger = logging.getLogger(__name__)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def boundary_bound(components: int, boundary_size: int) -> int:
    """max(0, ceil((l - 1) / |W|))"""
    return max(0, _ceil_div(components - 1, boundary_size))


def forest_components(tree: SpanningTree, removed: Collection[int]) -> list[list[int]]:
    """Connected components of the tree minus `removed`, each sorted, ordered by smallest vertex"""
    n = tree.n
    blocked = bytearray(n)
    for u in removed:
        blocked[u] = 1
    seen = bytearray(n)
    components = []
    for root in range(n):
        if blocked[root] or seen[root]:
            continue
        seen[root] = 1
        members = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in tree.adjacency[u]:
                if not blocked[v] and not seen[v]:
                    seen[v] = 1
                    members.append(v)
                    queue.append(v)
        components.append(sorted(members))
    return components


def component_count_bound(tree: SpanningTree, removed: Collection[int]) -> int:
    """Lower bound on the number of components of T minus B: sum of degrees - 2|B| + 2"""
    if not removed or len(set(removed)) >= tree.n:
        raise ValueError("removed set must be non-empty and proper")
    return sum(tree.deg[u] for u in removed) - 2 * len(removed) + 2


def pigeonhole_ratio(cert: LowerBoundCertificate) -> Fraction:
    """|B_0..B_h| / |B_0..B_{h+1}| as an exact fraction"""
    inner = sum(len(layer) for layer in cert.layers[: cert.h + 1])
    outer = sum(len(layer) for layer in cert.layers[: cert.h + 2])
    return Fraction(inner, outer)


def certificate_guarantee(cert: LowerBoundCertificate) -> Fraction:
    """k(1 - 4 eps) * |B_0..B_h| / |B_0..B_{h+1}|, the degree the layers force in theory"""
    return cert.k * (1 - 4 * Fraction(cert.eps)) * pigeonhole_ratio(cert)


def build_certificate(
    state: LayeringState, tree: SpanningTree, k: int
) -> LowerBoundCertificate:
    """
    Pick the layer count h and the clean components behind the certificate.

    Candidate h run over the computed layers below h_max and must satisfy
    |B_0..B_h| (1 + eps) >= |B_0..B_{h+1}|; the candidate with the largest bound
    wins, smallest h on ties. Some h always qualifies: otherwise the prefix
    sizes would grow past n within h_max layers. Components are recomputed on
    the current tree.

    Raises:
        NotTerminal: the layering stopped below h_max
        InvariantViolation: no h passes the ratio test
    """
    if not state.is_terminal:
        raise NotTerminal(f"layering stopped at h={state.h} < {state.h_max}")

    growth = 1 + Fraction(state.eps)
    top = min(state.last_layer, state.h_max - 1)
    sizes = [len(state.layer(i)) for i in range(top + 2)]
    prefix = [sum(sizes[: i + 1]) for i in range(len(sizes))]
    candidates = [h for h in range(top + 1) if prefix[h] * growth >= prefix[h + 1]]
    if not candidates:
        # unreachable for a terminal layering: h_max makes (1 + eps)^h_max exceed n
        raise InvariantViolation(f"no layer count passes the ratio test (sizes {sizes})")

    best: tuple[int, int, list[list[int]]] | None = None
    removed: set[int] = set()
    next_h = 0
    for h in candidates:
        while next_h <= h:
            removed.update(state.layer(next_h))
            next_h += 1
        clean = [
            comp
            for comp in forest_components(tree, removed)
            if not any(state.marked[u] for u in comp)
        ]
        bound = boundary_bound(len(clean), prefix[h + 1])
        if best is None or bound > best[0]:
            best = (bound, h, clean)

    assert best is not None
    bound, h, clean = best
    cert = LowerBoundCertificate(
        n=tree.n,
        k=k,
        eps=state.eps,
        layers=[sorted(state.layer(i)) for i in range(h + 2)],
        h=h,
        clean_components=clean,
        bound=bound,
    )
    logger.info(
        f"📜 certificate: k={k}, h={h}, {len(clean)} clean components, "
        f"|W|={prefix[h + 1]}, bound={bound}"
    )
    return cert


def verify_certificate(graph: Graph, tree: SpanningTree, cert: LowerBoundCertificate) -> int:
    """
    Recompute the bound a certificate proves and reject it when it overclaims.

    Returns:
        The verified lower bound on the optimum tree degree

    Raises:
        MalformedCertificate: shape or id problems, or a tree that is not a
            spanning tree of `graph`
        ComponentNotConnected, ComponentsOverlap, UncoveredBoundaryEdge,
        BoundOverclaimed: each with the offending object as `witness`
    """
    n = graph.n
    if cert.n != n or tree.n != n or tree.graph.edges != graph.edges:
        raise MalformedCertificate("certificate, tree and graph disagree on the instance")
    try:
        tree.validate()
    except InvalidTree as e:
        raise MalformedCertificate(f"tree rejected: {e}") from e
    if len(cert.layers) != cert.h + 2:
        raise MalformedCertificate(
            f"expected {cert.h + 2} layers for h={cert.h}, got {len(cert.layers)}"
        )

    layer_of: dict[int, int] = {}
    for i, layer in enumerate(cert.layers):
        for u in layer:
            if not 0 <= u < n:
                raise MalformedCertificate(f"layer {i} names vertex {u} outside 0..{n - 1}", u)
            if u in layer_of:
                raise MalformedCertificate(f"vertex {u} sits in layers {layer_of[u]} and {i}", u)
            layer_of[u] = i
    if not layer_of:
        raise MalformedCertificate("boundary set is empty")

    component_of: dict[int, int] = {}
    for c, comp in enumerate(cert.clean_components):
        if not comp:
            raise MalformedCertificate(f"component {c} is empty", c)
        for u in comp:
            if not 0 <= u < n:
                raise MalformedCertificate(f"component {c} names vertex {u} outside 0..{n - 1}", u)
            if u in component_of:
                raise ComponentsOverlap(
                    f"vertex {u} is in components {component_of[u]} and {c}", u
                )
            if layer_of.get(u, cert.h + 1) <= cert.h:
                raise ComponentNotConnected(f"component {c} contains removed vertex {u}", u)
            component_of[u] = c
        _check_connected(tree, comp, c)

    for u, v in graph.edges:
        cu, cv = component_of.get(u), component_of.get(v)
        if cu == cv:
            continue
        if u not in layer_of and v not in layer_of:
            raise UncoveredBoundaryEdge(f"boundary edge ({u}, {v}) avoids every layer", (u, v))

    verified = boundary_bound(len(cert.clean_components), len(layer_of))
    if verified < cert.bound:
        raise BoundOverclaimed(
            f"claimed bound {cert.bound} but the sets only prove {verified}",
            (verified, cert.bound),
        )
    return verified


def _check_connected(tree: SpanningTree, comp: list[int], index: int) -> None:
    members = set(comp)
    start = comp[0]
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in tree.adjacency[u]:
            if v in members and v not in seen:
                seen.add(v)
                queue.append(v)
    if len(seen) != len(members):
        stray = min(members - seen)
        raise ComponentNotConnected(
            f"component {index}: vertex {stray} is not reachable from {start}", stray
        )


def explain_certificate(
    graph: Graph, tree: SpanningTree, cert: LowerBoundCertificate
) -> dict[str, Any]:
    """Numbers behind a verified certificate, for human inspection"""
    verified = verify_certificate(graph, tree, cert)
    removed = cert.removed
    actual = len(forest_components(tree, removed))
    degree_bound = (
        component_count_bound(tree, removed) if 0 < len(removed) < tree.n else None
    )
    return {
        "layer_sizes": [len(layer) for layer in cert.layers],
        "h": cert.h,
        "clean_components": len(cert.clean_components),
        "boundary_size": len(cert.boundary_set),
        "verified_bound": verified,
        "pigeonhole_ratio": str(pigeonhole_ratio(cert)),
        "guarantee": float(certificate_guarantee(cert)),
        "removed_components": actual,
        "removed_components_lower_bound": degree_bound,
    }
