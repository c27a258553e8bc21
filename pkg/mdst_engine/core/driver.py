"""
Two-phase degree reduction controller
"""

import logging
import math
import time
from fractions import Fraction

from mdst_engine.core.augmentor import aug_seq_deg_red
from mdst_engine.core.certificate import (
    build_certificate,
    certificate_guarantee,
    pigeonhole_ratio,
    verify_certificate,
)
from mdst_engine.core.errors import CertificateError, InvariantViolation
from mdst_engine.models.certificate import LowerBoundCertificate
from mdst_engine.models.graph import Graph
from mdst_engine.models.reports import (
    DegRedCall,
    DegRedReport,
    Phase,
    PhaseStats,
    RunConfig,
    RunResult,
    RunStats,
)
from mdst_engine.models.tree import SpanningTree, bfs_tree

logger = logging.getLogger(__name__)

# scores closer than this count as equal in argmax_k
SCORE_TOLERANCE = 1e-12


def large_step_threshold(n: int, eps: float, scale: float = 1.0) -> float:
    """10 log^2 n / eps^3, log base 2"""
    return scale * 10 * math.log2(n) ** 2 / eps**3


def small_step_threshold(n: int, eps: float, scale: float = 1.0) -> float:
    """20 log n / eps^2, log base 2"""
    return scale * 20 * math.log2(n) / eps**2


def approximation_bound(delta_star: int, eps_user: float, n: int) -> float:
    """(1 + eps) * delta_star + 5 / (16 eps^2) * log2 n"""
    return (1 + eps_user) * delta_star + 5 / (16 * eps_user**2) * math.log2(n)


def reduction_failed(d_after: int, d_before: int, n: int, eps: float) -> bool:
    """d_after > (1 - eps^2 / (2 log n)) * d_before, decided in exact arithmetic"""
    log_n = Fraction(math.log2(n))
    e = Fraction(eps)
    return 2 * log_n * d_after > (2 * log_n - e * e) * d_before


def argmax_k(tree: SpanningTree, eps: float) -> int:
    """
    Degree class i in [Δ+1-⌊log2 n⌋, Δ] maximising c^i |N_i|, c = 6(2 + log_{1+eps} n).

    Compared as i ln c + ln |N_i|; near-ties go to the larger i.
    """
    n = tree.n
    delta = tree.delta
    low = max(1, delta + 1 - math.floor(math.log2(n)))
    ln_c = math.log(6 * (2 + math.log(n) / math.log1p(eps)))
    best_k = delta
    best_score = -math.inf
    for i in range(low, delta + 1):
        count = tree.n_k(i)
        if count == 0:
            continue
        score = i * ln_c + math.log(count)
        if score >= best_score - SCORE_TOLERANCE:
            best_k, best_score = i, score
    return best_k


class _Run:
    """Mutable state of one improved_mdst call"""

    def __init__(self, graph: Graph, config: RunConfig, tree: SpanningTree):
        self.graph = graph
        self.config = config
        self.tree = tree
        self.n = graph.n
        self.eps = config.eps
        self.stats = RunStats()
        self.started = time.perf_counter()
        self.deadline = (
            time.monotonic() + config.max_wall_seconds
            if config.max_wall_seconds is not None
            else None
        )

    def degred(self, k: int, phase: str, phase_stats: PhaseStats) -> DegRedReport:
        tick = time.perf_counter()
        report = aug_seq_deg_red(
            self.tree,
            k,
            self.eps,
            check_invariants=self.config.check_invariants,
            deadline=self.deadline,
        )
        phase_stats.degred_calls += 1
        phase_stats.modifications += report.modifications
        phase_stats.wall_ms += (time.perf_counter() - tick) * 1000
        self.stats.calls.append(
            DegRedCall(
                phase=phase,
                k=k,
                delta=self.tree.delta,
                d_before=report.d_before,
                d_after=report.d_after,
                modifications=report.modifications,
            )
        )
        return report

    def certify(self, report: DegRedReport) -> LowerBoundCertificate:
        if report.state is None:
            raise InvariantViolation(f"no layering kept for k={report.k}")
        cert = build_certificate(report.state, self.tree, report.k)
        try:
            verify_certificate(self.graph, self.tree, cert)
        except CertificateError as e:
            raise InvariantViolation(f"own certificate rejected: {e}") from e
        if pigeonhole_ratio(cert) * (1 + Fraction(cert.eps)) < 1:
            raise InvariantViolation(
                f"certificate h={cert.h} fails |B_0..B_h|(1+eps) >= |B_0..B_(h+1)|"
            )
        guarantee = certificate_guarantee(cert) / (1 + Fraction(cert.eps))
        logger.debug(f"certificate bound {cert.bound}, layered guarantee {float(guarantee):.3f}")
        return cert

    def finish(self, phase: Phase, cert: LowerBoundCertificate | None = None) -> RunResult:
        self.stats.wall_ms = (time.perf_counter() - self.started) * 1000
        logger.info(
            f"✅ finished in {phase.value}: Δ={self.tree.delta}, "
            f"{self.stats.degred_calls} degree reductions, {self.stats.modifications} modifications"
        )
        return RunResult(
            tree=self.tree,
            delta=self.tree.delta,
            phase=phase,
            stats=self.stats,
            certificate=cert,
        )


def improved_mdst(
    graph: Graph, config: RunConfig, tree: SpanningTree | None = None
) -> RunResult:
    """
    Run the large-step and small-step phases from a starting tree (BFS from 0 by default).

    Large step, while Δ >= 10 log²n/ε³: raise k from ⌈(1-2ε)Δ⌉+1 until d_k = 0,
    reducing at every k with d_{k-1} <= 2 d_k. Small step, while Δ >= 20 log n/ε²:
    reduce at argmax_k until Δ drops. Either phase returns with a certificate as
    soon as a reduction shrinks d_k by less than a factor 1 - ε²/(2 log n).

    Raises:
        TimedOut: config.max_wall_seconds elapsed; carries the current tree
    """
    run = _Run(graph, config, tree if tree is not None else bfs_tree(graph, 0))
    tree = run.tree
    n, eps = run.n, run.eps
    run.stats.delta_history.append(tree.delta)
    if n < 3:
        return run.finish(Phase.SMALL_STEP_EXIT)

    large = large_step_threshold(n, eps, config.threshold_scale)
    small = small_step_threshold(n, eps, config.threshold_scale)
    logger.info(
        f"🚀 n={n}, m={graph.m}, eps={eps:g}, start Δ={tree.delta}, "
        f"thresholds large={large:.1f} small={small:.1f}"
    )

    while tree.delta > 2 and tree.delta >= large:
        delta_old = tree.delta
        k = min(max(math.ceil((1 - 2 * eps) * delta_old) + 1, 3), delta_old)
        logger.info(f"large step from Δ={delta_old}, k={k}")
        while tree.d_k(k) > 0:
            if tree.d_k(k - 1) <= 2 * tree.d_k(k):
                d = tree.d_k(k)
                report = run.degred(k, "large-step", run.stats.large_step)
                if reduction_failed(report.d_after, d, n, eps):
                    return run.finish(Phase.LARGE_STEP_RETURN, run.certify(report))
            k += 1
        if tree.delta >= delta_old:
            logger.warning(f"large step left Δ at {tree.delta}; moving on to the small step")
            break
        run.stats.delta_history.append(tree.delta)
        logger.info(f"large step: Δ {delta_old} -> {tree.delta}")

    while tree.delta > 2 and tree.delta >= small:
        delta_old = tree.delta
        while tree.delta == delta_old:
            k = max(argmax_k(tree, eps), 3)
            d = tree.d_k(k)
            report = run.degred(k, "small-step", run.stats.small_step)
            if reduction_failed(report.d_after, d, n, eps):
                return run.finish(Phase.SMALL_STEP_RETURN, run.certify(report))
        run.stats.delta_history.append(tree.delta)
        logger.info(f"small step: Δ {delta_old} -> {tree.delta}")

    return run.finish(Phase.SMALL_STEP_EXIT)
