"""
Run configuration, results and machine-readable reports
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING

from pydantic import BaseModel, ConfigDict, Field

if TYPE_CHECKING:
    from mdst_engine.core.layering import LayeringState
    from mdst_engine.models.certificate import LowerBoundCertificate
    from mdst_engine.models.tree import SpanningTree


class RunConfig(BaseModel):
    """Validated solver flags. The analysis runs with eps = eps_user / 8."""

    model_config = ConfigDict(frozen=True)

    eps_user: float = Field(gt=0.0, lt=1.0 / 6.0, description="User-facing epsilon")
    seed: int = Field(default=0, ge=0, description="Root seed of every random stream")
    max_wall_seconds: float | None = Field(default=None, gt=0.0)
    threshold_scale: float = Field(
        default=1.0, ge=0.0, description="Multiplier on both phase-entry thresholds"
    )
    check_invariants: bool = False

    @property
    def eps(self) -> float:
        return self.eps_user / 8


class Phase(str, Enum):
    """How improved_mdst returned"""

    LARGE_STEP_RETURN = "large-step-return"
    SMALL_STEP_RETURN = "small-step-return"
    SMALL_STEP_EXIT = "small-step-exit"


@dataclass
class ModificationReport:
    """Effect of applying one augmenting sequence"""

    added_edges: list[int] = field(default_factory=list)
    removed_edges: list[int] = field(default_factory=list)
    degree_deltas: dict[int, int] = field(default_factory=dict)
    newly_marked: list[int] = field(default_factory=list)


@dataclass
class DegRedReport:
    """Outcome of one degree-reduction call for a fixed k"""

    k: int
    d_before: int
    d_after: int
    state: LayeringState | None = None
    modifications: int = 0
    marked_growth: int = 0
    h_history: list[int] = field(default_factory=list)
    d_history: list[int] = field(default_factory=list)
    terminal_layer_sizes: list[int] = field(default_factory=list)


@dataclass
class DegRedCall:
    phase: str
    k: int
    delta: int
    d_before: int
    d_after: int
    modifications: int


@dataclass
class PhaseStats:
    degred_calls: int = 0
    modifications: int = 0
    wall_ms: float = 0.0


@dataclass
class RunStats:
    """Per-phase counters plus the Δ and d_k trajectories of one run"""

    large_step: PhaseStats = field(default_factory=PhaseStats)
    small_step: PhaseStats = field(default_factory=PhaseStats)
    delta_history: list[int] = field(default_factory=list)
    calls: list[DegRedCall] = field(default_factory=list)
    wall_ms: float = 0.0

    @property
    def degred_calls(self) -> int:
        return self.large_step.degred_calls + self.small_step.degred_calls

    @property
    def modifications(self) -> int:
        return self.large_step.modifications + self.small_step.modifications


@dataclass
class RunResult:
    tree: SpanningTree
    delta: int
    phase: Phase
    stats: RunStats
    certificate: LowerBoundCertificate | None = None


class SolveReport(BaseModel):
    """Stable JSON summary of one `solve` run; field order is the wire order"""

    n: int
    m: int
    eps_user: float
    seed: int
    tree_degree: int
    phase: Phase
    certificate_bound: int | None = None
    degred_calls: int
    modifications: int
    wall_ms: float | None = None

    @classmethod
    def from_result(
        cls, result: RunResult, config: RunConfig, timings: bool = True
    ) -> SolveReport:
        tree = result.tree
        return cls(
            n=tree.n,
            m=tree.graph.m,
            eps_user=config.eps_user,
            seed=config.seed,
            tree_degree=max(tree.deg) if tree.n > 1 else 0,
            phase=result.phase,
            certificate_bound=result.certificate.bound if result.certificate else None,
            degred_calls=result.stats.degred_calls,
            modifications=result.stats.modifications,
            wall_ms=round(result.stats.wall_ms, 3) if timings else None,
        )


class GraphKind(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE = "complete"
    GNP = "gnp"
    HYPERCUBE = "hypercube"
    WHEEL = "wheel"
    HAM_PATH_PLUS_EDGES = "ham-path-plus-edges"
    BROOM = "broom"


class GenSpec(BaseModel):
    """Generator request; parameter checks happen in `generate` (BadParams)"""

    kind: GraphKind
    n: int | None = None
    p: float | None = None
    d: int | None = None
    extra: int = 0
    seed: int = 0
