"""
Ground-truth helpers: generators, exact optimum, baseline and reference solvers
"""

from mdst_engine.oracle.baseline import local_search_baseline
from mdst_engine.oracle.exact import exact_mdst, spanning_tree_count
from mdst_engine.oracle.generators import GeneratedGraph, generate
from mdst_engine.oracle.reference import reference_degred

__all__ = [
    "local_search_baseline",
    "exact_mdst",
    "spanning_tree_count",
    "GeneratedGraph",
    "generate",
    "reference_degred",
]
