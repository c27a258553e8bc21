"""
Scaling ladder and bench history
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

from sqlalchemy.orm import Session

from mdst_engine.core.driver import improved_mdst
from mdst_engine.models import BenchRun, GenSpec, GraphKind, RunConfig
from mdst_engine.oracle.generators import generate

logger = logging.getLogger(__name__)

CSV_HEADER = ["n", "m", "eps", "wall_ms", "tree_degree", "degred_calls"]


@dataclass
class BenchRow:
    n: int
    m: int
    eps: float
    wall_ms: float
    tree_degree: int
    degred_calls: int

    def as_csv(self) -> list[str]:
        return [str(value) for value in asdict(self).values()]


def ladder_sizes(min_log_n: int, max_log_n: int) -> list[int]:
    return [2**j for j in range(min_log_n, max_log_n + 1)]


def run_point(n: int, avg_degree: float, config: RunConfig) -> BenchRow:
    """Solve one gnp graph with n vertices and the given expected average degree"""
    p = min(1.0, avg_degree / max(n - 1, 1))
    graph = generate(GenSpec(kind=GraphKind.GNP, n=n, p=p, seed=config.seed)).graph
    result = improved_mdst(graph, config)
    row = BenchRow(
        n=n,
        m=graph.m,
        eps=config.eps_user,
        wall_ms=round(result.stats.wall_ms, 3),
        tree_degree=result.delta,
        degred_calls=result.stats.degred_calls,
    )
    logger.info(f"📏 ladder point n={n}: m={row.m}, Δ={row.tree_degree}, {row.wall_ms} ms")
    return row


def run_ladder(
    sizes: list[int], avg_degree: float, config: RunConfig, workers: int = 1
) -> list[BenchRow]:
    """Run every ladder point, one independent solve per worker thread"""
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(lambda n: run_point(n, avg_degree, config), sizes))
    return sorted(rows, key=lambda row: row.n)


def ratio_violations(rows: list[BenchRow], max_ratio: float) -> list[str]:
    """Consecutive doublings whose wall time grew by more than `max_ratio`"""
    problems = []
    for prev, cur in zip(rows, rows[1:]):
        if prev.wall_ms > 0 and cur.wall_ms / prev.wall_ms > max_ratio:
            problems.append(
                f"n={prev.n}->{cur.n}: wall time ratio {cur.wall_ms / prev.wall_ms:.2f} > {max_ratio}"
            )
    return problems


class BenchHistory:
    """Recorded ladders in the bench database"""

    def __init__(self, db_session: Session):
        self.db = db_session

    def record(self, label: str, rows: list[BenchRow]) -> list[BenchRun]:
        runs = [BenchRun(label=label, **asdict(row)) for row in rows]
        self.db.add_all(runs)
        self.db.commit()
        logger.info(f"recorded {len(runs)} ladder points as '{label}'")
        return runs

    def baseline(self, label: str) -> list[BenchRun]:
        return BenchRun.for_label(self.db, label)

    def compare(self, label: str, rows: list[BenchRow], max_ratio: float) -> list[str]:
        """
        Check a fresh ladder against the envelope recorded under `label`.

        Returns:
            Human-readable problems; empty when the ladder is within the envelope
        """
        stored = {run.n: run for run in self.baseline(label)}
        if not stored:
            return [f"no bench history under label '{label}'"]
        problems = ratio_violations(rows, max_ratio)
        for row in rows:
            old = stored.get(row.n)
            if old is None:
                continue
            if row.tree_degree > old.tree_degree:
                problems.append(
                    f"n={row.n}: tree degree {row.tree_degree} worse than recorded {old.tree_degree}"
                )
        return problems
