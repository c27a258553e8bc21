"""
CLI commands
"""

from argparse import _SubParsersAction

from mdst_engine.adapters.cli.commands.bench import register_bench_command
from mdst_engine.adapters.cli.commands.exact import register_exact_command
from mdst_engine.adapters.cli.commands.gen import register_gen_command
from mdst_engine.adapters.cli.commands.solve import register_solve_command
from mdst_engine.adapters.cli.commands.verify import register_verify_command


def register_commands(subparsers: _SubParsersAction) -> None:
    """Register all subcommands"""
    register_solve_command(subparsers)
    register_verify_command(subparsers)
    register_exact_command(subparsers)
    register_gen_command(subparsers)
    register_bench_command(subparsers)
