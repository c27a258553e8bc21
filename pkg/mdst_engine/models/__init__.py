"""
Data models
"""

from mdst_engine.models.base import Base, get_db, init_db
from mdst_engine.models.bench_run import BenchRun
from mdst_engine.models.certificate import LowerBoundCertificate
from mdst_engine.models.graph import Graph, GraphFormat, format_graph, parse_graph
from mdst_engine.models.reports import (
    DegRedReport,
    GenSpec,
    GraphKind,
    ModificationReport,
    Phase,
    RunConfig,
    RunResult,
    RunStats,
    SolveReport,
)
from mdst_engine.models.tree import SpanningTree, TreePath, bfs_tree, tree_path

__all__ = [
    "Base",
    "get_db",
    "init_db",
    "BenchRun",
    "LowerBoundCertificate",
    "Graph",
    "GraphFormat",
    "format_graph",
    "parse_graph",
    "DegRedReport",
    "GenSpec",
    "GraphKind",
    "ModificationReport",
    "Phase",
    "RunConfig",
    "RunResult",
    "RunStats",
    "SolveReport",
    "SpanningTree",
    "TreePath",
    "bfs_tree",
    "tree_path",
]
