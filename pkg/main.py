#!/usr/bin/env python3
"""
Main entry point for resint
"""

import sys
import argparse
import logging
from typing import Optional, Sequence

import pydantic
import yaml

from resint.commands.bench import cmd_bench
from resint.commands.check import cmd_check
from resint.commands.models import RunConfig
from resint.commands.normalform import cmd_normalform
from resint.commands.quantities import cmd_quantities
from resint.config.config import Config, Settings, set_logging
from resint.errors import AlgorithmMismatchError, ResintError

logger = logging.getLogger("resint")

COMMANDS = {
    "quantities": cmd_quantities,
    "bench": cmd_bench,
    "normalform": cmd_normalform,
    "check": cmd_check,
}

EXIT_INVALID_INPUT = 1
EXIT_ALGORITHM_MISMATCH = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="resint - integrability quantities and normal forms of 3D systems with eigenvalues 1, z, z^2")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=None, help="YAML configuration file")
    common.add_argument(
        "--log-level",
        type=str,
        default=None,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Logging level"
    )
    common.add_argument("--json", action="store_true", dest="json_output", help="Emit JSON output")
    common.add_argument("--out", type=str, default=None, help="Write the report to this file")

    subparsers = parser.add_subparsers(dest="command", required=True)

    quantities = subparsers.add_parser("quantities", parents=[common], help="Compute g_111 ... g_KKK")
    quantities.add_argument("--spec", type=str, required=True, help="System specification JSON")
    quantities.add_argument("--k", type=int, default=None, help="Number of quantities K")
    quantities.add_argument("--alg", type=str, default=None, choices=["1", "2", "both"], help="Algorithm")
    quantities.add_argument("--timing", action="store_true", help="Include elapsed_ms in the summary")

    bench = subparsers.add_parser("bench", parents=[common], help="Time both algorithms on the benchmark sets")
    bench.add_argument("--spec", type=str, default=None, help="Benchmark only this specification")
    bench.add_argument("--k", type=int, default=None, help="Largest k")
    bench.add_argument("--alg", type=str, default=None, choices=["1", "2", "both"], help="Algorithm")

    normalform = subparsers.add_parser("normalform", parents=[common], help="Truncated normal form at a point")
    normalform.add_argument("--spec", type=str, required=True, help="System specification JSON with values")
    normalform.add_argument("--d", "--order", type=int, default=None, dest="order", help="Truncation degree D")
    normalform.add_argument("--verify", action="store_true", help="Run the reconstruction self-test")

    check = subparsers.add_parser("check", parents=[common], help="Integrability conditions of the quadratic family")
    check.add_argument("--point", type=str, default=None, help="Quadratic point JSON")
    check.add_argument("--component", type=int, default=None, help="Component J_1 ... J_9 to sample")
    check.add_argument("--reversible", action="store_true", help="Sample z-reversible points")
    check.add_argument("--samples", type=int, default=None, help="Number of samples")
    check.add_argument("--seed", type=int, default=None, help="Seed of the first sample")
    check.add_argument("--k", type=int, default=None, help="Number of quantities to evaluate")
    check.add_argument("--d", "--order", type=int, default=None, dest="order", help="Normal-form degree D")
    return parser


def run_config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        spec_path=getattr(args, "spec", None),
        point_path=getattr(args, "point", None),
        k=getattr(args, "k", None),
        order=getattr(args, "order", None),
        algorithm=getattr(args, "alg", None),
        json_output=args.json_output,
        seed=getattr(args, "seed", None),
        out=args.out,
        component=getattr(args, "component", None),
        samples=getattr(args, "samples", None),
        reversible=getattr(args, "reversible", False),
        timing=getattr(args, "timing", False),
        verify=getattr(args, "verify", False),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = Config(args.config)
    except (OSError, ValueError, yaml.YAMLError) as e:
        set_logging(args.log_level or "INFO")
        logger.error(f"Cannot load configuration: {e}")
        return EXIT_INVALID_INPUT

    # command line first, then RESINT_LOG_LEVEL, then the YAML config
    level = args.log_level or Settings().log_level or config.get_logging_config().get("level", "INFO")
    set_logging(level)

    try:
        cfg = run_config_from_args(args)
        return COMMANDS[cfg.command](cfg, config)
    except pydantic.ValidationError as e:
        logger.error(f"Invalid arguments: {e}")
        return EXIT_INVALID_INPUT
    except AlgorithmMismatchError as e:
        logger.error(str(e))
        return EXIT_ALGORITHM_MISMATCH
    except (ResintError, ValueError, ZeroDivisionError) as e:
        logger.error(str(e))
        return EXIT_INVALID_INPUT
    except OSError as e:
        logger.error(f"Cannot read or write file: {e}")
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
