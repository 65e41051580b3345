"""
bounce-lab command line: analyze | hurst | features | surrogate.

Configuration precedence: built-in defaults < environment (.env) < --config
file < command-line flags.
"""

import argparse
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from loguru import logger

from core.config import RunConfig
from core.config import config as app_config
from core.exceptions import BounceLabException
from core.logging import configure_logging
from core.observability import write_metrics
from core.orchestrator import create_orchestrator

COMMANDS = ("analyze", "hurst", "features", "surrogate")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bounce-lab",
        description="Memory effects at support and resistance levels",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="key = value run configuration")
    common.add_argument("--input", type=Path, help="tick CSV file or directory")
    common.add_argument("--scales", help="comma-separated scales, e.g. 45,60,90,180")
    common.add_argument("--mode", choices=["seconds", "ticks"], help="resample mode")
    common.add_argument("--seed", type=int, help="root seed of every random stream")
    common.add_argument("--out", dest="output_dir", type=Path, help="output directory")
    common.add_argument(
        "--workers", type=int, help="worker processes (capped by BOUNCE_LAB_THREADS)"
    )
    common.add_argument("--log-level", help="loguru level (env: LOG_LEVEL)")
    common.add_argument(
        "--metrics-file", type=Path, help="write Prometheus metrics here after the run"
    )
    common.add_argument(
        "--surrogate-kind",
        choices=["ShuffledReturns", "FractionalWalk", "StickyLevel"],
        help="generate days instead of reading --input",
    )
    common.add_argument("--days", dest="surrogate_days", type=int)
    common.add_argument("--length", dest="surrogate_length", type=int)
    common.add_argument("--hurst", dest="surrogate_hurst", type=float)
    common.add_argument("--bounce-bias", dest="surrogate_bounce_bias", type=float)
    common.add_argument(
        "--interval",
        dest="surrogate_interval",
        type=float,
        help="seconds between generated trades (default: one step per scale)",
    )

    helps = {
        "analyze": "bounce statistics and independence test",
        "hurst": "DFA Hurst exponent per day",
        "features": "recurrence time / max excursion distributions",
        "surrogate": "write seeded surrogate days as tick files",
    }
    for command in COMMANDS:
        subparsers.add_parser(command, parents=[common], help=helps[command])
    return parser


_NOT_CONFIG = {"command", "config", "log_level", "metrics_file"}


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    return {
        key: value
        for key, value in vars(args).items()
        if key not in _NOT_CONFIG and value is not None
    }


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level or app_config.log_level)

    exit_code = 1
    try:
        run_config = RunConfig.load(
            args.config,
            overrides=_overrides(args),
            defaults={"output_dir": app_config.output_dir},
        )
        result = create_orchestrator().run(args.command, run_config)
        if result.succeeded:
            for path in result.results.get("files", []):
                print(path)
            exit_code = 0
        else:
            error = result.exception or "; ".join(result.errors.values())
            logger.error(f"{args.command} failed: {error}")
    except BounceLabException as e:
        logger.error(f"{args.command} failed: {e}")
    except Exception as e:
        logger.exception(f"{args.command} failed unexpectedly: {e}")
    finally:
        if args.metrics_file is not None:
            try:
                write_metrics(args.metrics_file)
            except OSError as e:
                logger.error(f"Could not write metrics to {args.metrics_file}: {e}")

    return exit_code


if __name__ == "__main__":
    sys.exit(main())
