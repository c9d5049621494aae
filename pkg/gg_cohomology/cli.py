"""Command line front end: `python -m gg_cohomology <command> [flags]`.

Exit codes: 0 success, 1 a checked property failed, 2 invalid configuration,
64 usage error.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .actions import run_estimate, run_selftest, run_sweep, verify_case_table
from .config import RunConfig, environment_defaults
from .errors import GGError
from .utils import configure_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_USAGE = 64

ACTIONS = {
    "verify-case-table": verify_case_table,
    "sweep": run_sweep,
    "estimate": run_estimate,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, help="master seed (default GG_SEED or 0)")
    common.add_argument("--out", type=Path, help="write the JSON report (and a CSV next to it) here")
    common.add_argument("-v", "--verbose", action="count", default=0)

    runs = argparse.ArgumentParser(add_help=False)
    runs.add_argument("--surface", choices=("disc", "sphere", "torus"))
    runs.add_argument("--epsilon", type=float, nargs="+", help="epsilon; a decreasing list for sweep")
    runs.add_argument("--samples", type=int, dest="n_samples")
    runs.add_argument("--workers", type=int, help="worker processes (default GG_WORKERS or 1)")
    runs.add_argument("--audit-fraction", type=float, dest="audit_fraction")
    runs.add_argument("--config", type=Path, help="JSON run config; its keys override flags")

    parser = _Parser(prog="gg_cohomology", description="Averaged braid cochains on surfaces.")
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)
    commands.add_parser("verify-case-table", parents=[common, runs], help="check the case tables")
    commands.add_parser("sweep", parents=[common, runs], help="estimate over a list of epsilons")
    commands.add_parser("estimate", parents=[common, runs], help="one Monte Carlo estimate")
    commands.add_parser("selftest", parents=[common], help="run the invariant suite")
    return parser


def _flags(args: argparse.Namespace, env: dict) -> dict:
    flags = {
        "command": args.command,
        "surface": args.surface,
        "n_samples": args.n_samples,
        "seed": args.seed if args.seed is not None else env.get("seed"),
        "workers": args.workers if args.workers is not None else env.get("workers"),
        "audit_fraction": args.audit_fraction,
        "out": args.out,
    }
    if args.epsilon:
        if args.command == "sweep":
            flags["epsilons"] = args.epsilon
        elif len(args.epsilon) == 1:
            flags["epsilon"] = args.epsilon[0]
        else:
            flags["epsilon"] = args.epsilon
    return flags


def _emit(result, out: Optional[Path]) -> None:
    if out is None:
        print(result)
    else:
        path = result.save_to_file(out)
        logger.info("Wrote %s", path)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    try:
        env = environment_defaults()
        configure_logging(env["log_level"], args.verbose)
        if args.command == "selftest":
            seed = args.seed if args.seed is not None else env.get("seed", 0)
            result, passed = run_selftest(seed)
            _emit(result, args.out)
            return EXIT_OK if passed else EXIT_FAILED

        config = RunConfig.from_sources(_flags(args, env), args.config)
        config.validate_for_run()
        result, passed = ACTIONS[config.command](config)
        _emit(result, config.out)
        return EXIT_OK if passed else EXIT_FAILED
    except GGError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID if isinstance(e, ValueError) else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
