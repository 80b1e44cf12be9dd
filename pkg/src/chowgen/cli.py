"""Command-line front end: ``chowgen present|verify|series|table``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Optional, Sequence

from chowgen import __version__
from chowgen.algebra.ring import normal_form_mod_2c3
from chowgen.algebra.series import GradedSeries, crosscheck_resummation, expand, generating_function
from chowgen.async_utils import run_sweep_sync
from chowgen.config import config
from chowgen.emitters import OutputFormat, render_presentations, render_series, render_table
from chowgen.golden import TABLE_RANKS
from chowgen.logging_config import (
    ChowgenError,
    MismatchReport,
    ProgressLogger,
    UserError,
    get_logger,
    log_error,
    log_sweep_complete,
    log_sweep_start,
    setup_logging,
)
from chowgen.monitor import monitor
from chowgen.presentation import (
    Form,
    build_table_block,
    presentation,
    raw_discrepancies,
    verify_ambient_redundancy,
    verify_claim_Z1,
    verify_claim_Z2,
    verify_complement_class,
)

logger = get_logger("cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

RESUMMATIONS = tuple((component, k) for component in (1, 2) for k in (0, 1, 2))


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def _emit(payload: str) -> None:
    sys.stdout.write(payload)
    sys.stdout.flush()


def cmd_present(args: argparse.Namespace) -> int:
    forms = [Form.CLOSED, Form.GF] if args.form == "both" else [Form(args.form)]
    ideals = [presentation(args.r, form) for form in forms]
    _emit(render_presentations(ideals, OutputFormat(args.format)).payload)
    return EXIT_OK


def verify_rank(r: int) -> tuple[int, bool, bool]:
    """Both ideal-equality claims for one r; module-level so worker processes can run it."""
    return r, verify_claim_Z1(r), verify_claim_Z2(r)


def resummation_range(component: int, k: int, r_max: int, series_degree: int) -> int:
    """Largest r whose relation fits in the expansion degree, capped at r_max."""
    fit = series_degree - k if component == 1 else (series_degree - k) // 2
    return max(0, min(r_max, fit))


def collect_checks(
    r_max: int,
    jobs: int = 1,
    series_degree: int = 40,
    progress: Optional[ProgressLogger] = None,
    timeout: Optional[float] = None,
) -> list[tuple[str, bool]]:
    """Every verification check as (name, passed), in report order.

    Raises:
        SweepTimeoutError: if the per-r claim sweep exceeds timeout seconds.
    """
    if jobs > 1 and not monitor.pool_allowed(jobs):
        jobs = 1
    ranks = run_sweep_sync(
        verify_rank,
        range(1, r_max + 1),
        jobs=jobs,
        timeout=timeout,
        progress_callback=(lambda r, _: progress.update(f"r={r}")) if progress else None,
    )

    checks: list[tuple[str, bool]] = []
    for r, z1, _ in ranks:
        checks.append((f"claim_Z1 r={r}", z1))
    for r, _, z2 in ranks:
        checks.append((f"claim_Z2 r={r}", z2))
    checks.append(("ambient_redundancy", verify_ambient_redundancy()))
    checks.append(("complement_class", verify_complement_class()))
    for component, k in RESUMMATIONS:
        bound = resummation_range(component, k, r_max, series_degree)
        result = crosscheck_resummation(component, k, bound)
        if result and not result.exact:
            logger.info(f"A({component},{k}) agrees with the alphas only mod 2c3")
        checks.append((f"resummation A({component},{k})", bool(result)))
    return checks


def cmd_verify(args: argparse.Namespace) -> int:
    started = time.monotonic()
    monitor.reset()
    log_sweep_start(logger, "verify", r_max=args.r_max, jobs=args.jobs, timeout=args.timeout)

    progress = ProgressLogger(logger, total_steps=args.r_max)
    checks = collect_checks(args.r_max, args.jobs, args.series_degree, progress, args.timeout)

    failed = [name for name, ok in checks if not ok]
    lines = [f"{name} {'PASS' if ok else 'FAIL'}" for name, ok in checks]
    lines.append(f"summary: {len(checks)} checks, {len(failed)} failed")
    _emit("\n".join(lines) + "\n")

    monitor.log_summary()
    log_sweep_complete(
        logger, not failed, time.monotonic() - started, checks=len(checks), failed=len(failed)
    )
    return EXIT_FAILED if failed else EXIT_OK


def cmd_series(args: argparse.Namespace) -> int:
    g = generating_function(1 if args.which == "R1" else 2)
    series = expand(g, args.max_degree)
    if not args.exact:
        series = GradedSeries(tuple(normal_form_mod_2c3(part) for part in series.components))
    _emit(render_series(args.which, series, OutputFormat(args.format)).payload)
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    blocks = [build_table_block(r) for r in TABLE_RANKS]
    _emit(render_table(blocks, OutputFormat(args.format)).payload)
    for r in TABLE_RANKS:
        for d in raw_discrepancies(r):
            logger.info(f"r={r} {d.label}: exact {d.exact}, printed {d.printed} (equal mod 2c3)")
    mismatches = [
        (f"r={block.r} {cell.label}", cell.text, cell.golden)
        for block in blocks
        for cell in block.mismatches
    ]
    if mismatches:
        log_error(logger, MismatchReport(mismatches), include_traceback=False)
        return EXIT_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chowgen",
        description="Integral Chow ring presentations of the space of conics in P^r",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        default=None,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level (default: CHOWGEN_LOG_LEVEL or WARNING)",
    )
    parser.add_argument("--log-file", default=None, help="Also write logs to this file")
    formats = [f.value for f in OutputFormat]
    sub = parser.add_subparsers(dest="command", required=True)

    present = sub.add_parser("present", help="Emit the presentation ideal for one r")
    present.add_argument("--r", type=_positive_int, required=True)
    present.add_argument("--form", choices=["closed", "gf", "both"], default="both")
    present.add_argument("--format", choices=formats, default="text")
    present.set_defaults(handler=cmd_present)

    verify = sub.add_parser("verify", help="Run the verification sweep")
    verify.add_argument("--r-max", type=_positive_int, default=config.r_max)
    verify.add_argument("--jobs", type=_positive_int, default=config.jobs)
    verify.add_argument("--series-degree", type=_non_negative_int, default=config.series_degree)
    verify.add_argument(
        "--timeout",
        type=_positive_float,
        default=config.sweep_timeout,
        help="Give up on the claim sweep after this many seconds",
    )
    verify.set_defaults(handler=cmd_verify)

    series = sub.add_parser("series", help="Expand R1 or R2 to a given degree")
    series.add_argument("--which", choices=["R1", "R2"], required=True)
    series.add_argument("--max-degree", type=_non_negative_int, required=True)
    series.add_argument("--format", choices=formats, default="text")
    series.add_argument(
        "--exact", action="store_true", help="Print integer components without reducing mod 2c3"
    )
    series.set_defaults(handler=cmd_series)

    table = sub.add_parser("table", help="Reproduce the printed generator table for r = 1, 2, 3")
    table.add_argument("--format", choices=formats, default="text")
    table.set_defaults(handler=cmd_table)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    setup_logging(args.log_level or config.log_level, args.log_file or config.log_file)
    try:
        return args.handler(args)
    except UserError as e:
        log_error(logger, e, include_traceback=False)
        print(f"chowgen: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ChowgenError as e:
        log_error(logger, e)
        print(f"chowgen: error: {e}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
