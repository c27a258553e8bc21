"""
Command-line adapter
"""

from mdst_engine.adapters.cli.app import build_parser, main, run

__all__ = ["build_parser", "main", "run"]
