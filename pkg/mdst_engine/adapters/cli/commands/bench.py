"""
bench: scaling ladder as CSV, with optional recorded history
"""

import argparse
import csv
import io
import logging

from mdst_engine.adapters.cli.utils import EXIT_OK, EXIT_REJECTED, write_text
from mdst_engine.config.settings import settings
from mdst_engine.core.bench import (
    CSV_HEADER,
    BenchHistory,
    ladder_sizes,
    ratio_violations,
    run_ladder,
)
from mdst_engine.models import RunConfig, get_db, init_db

logger = logging.getLogger(__name__)


def register_bench_command(subparsers: argparse._SubParsersAction) -> None:
    bench = settings.bench
    parser = subparsers.add_parser("bench", help="Run the n = 2^a..2^b scaling ladder")
    parser.add_argument("--min-log-n", type=int, default=bench.min_log_n)
    parser.add_argument("--max-log-n", type=int, default=bench.max_log_n)
    parser.add_argument("--avg-degree", type=float, default=bench.avg_degree)
    parser.add_argument("--epsilon", type=float, default=bench.epsilon)
    parser.add_argument("--workers", type=int, default=bench.workers)
    parser.add_argument("--max-ratio", type=float, default=bench.max_ratio)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--output", "-o", default="-", help="CSV file, '-' for stdout")
    parser.add_argument("--record", metavar="LABEL", help="Store the ladder in bench history")
    parser.add_argument("--compare", metavar="LABEL", help="Check against a recorded ladder")
    parser.set_defaults(handler=handle_bench)


def handle_bench(args: argparse.Namespace) -> int:
    config = RunConfig(
        eps_user=args.epsilon,
        seed=args.seed,
        threshold_scale=settings.solver.threshold_scale,
    )
    sizes = ladder_sizes(args.min_log_n, args.max_log_n)
    logger.info(f"🚀 bench ladder {sizes} with {args.workers} workers")
    rows = run_ladder(sizes, args.avg_degree, config, workers=max(args.workers, 1))

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(row.as_csv() for row in rows)
    write_text(args.output, buffer.getvalue())

    for problem in ratio_violations(rows, args.max_ratio):
        logger.warning(f"⚠️ {problem}")

    if not (args.record or args.compare):
        return EXIT_OK
    init_db()
    with get_db() as db:
        history = BenchHistory(db)
        problems = history.compare(args.compare, rows, args.max_ratio) if args.compare else []
        if args.record:
            history.record(args.record, rows)
    for problem in problems:
        logger.error(f"bench regression: {problem}")
    return EXIT_REJECTED if problems else EXIT_OK
