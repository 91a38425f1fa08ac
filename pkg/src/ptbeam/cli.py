"""Command-line entry point: run experiments to CSV, or validate the build.

Exit codes: 0 success, 1 validation failure, 2 configuration error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .experiments import (
    CONFIG_DIR_ENV,
    EXPERIMENTS,
    ConfigError,
    default_config_path,
    load_config,
    run_experiment,
    write_csv,
)
from .validation import run_validation


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ptbeam",
        description=(
            "PT-symmetric qubit + beam-splitter nonclassicality experiments. "
            f"Default configs ship with the package; set {CONFIG_DIR_ENV} to override."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--list", action="store_true", help="list available experiments and exit"
    )
    sub = parser.add_subparsers(dest="command")

    run_p = sub.add_parser("run", help="run one experiment and emit CSV")
    run_p.add_argument("experiment", help="experiment id (see --list)")
    run_p.add_argument("--config", type=Path, default=None, help="config file path")
    run_p.add_argument(
        "--out", type=Path, default=None, help="output CSV path (default: stdout)"
    )

    sub.add_parser("validate", help="run the analytic cross-check suite")
    return parser


def _cmd_run(args) -> int:
    config_path = args.config if args.config is not None else default_config_path(args.experiment)
    header, rows = run_experiment(args.experiment, load_config(config_path))
    if args.out is None:
        write_csv(sys.stdout, header, rows)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            count = write_csv(handle, header, rows)
        print(f"wrote {count} rows to {args.out}", file=sys.stderr)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.list:
        for name in sorted(EXPERIMENTS):
            print(name)
        return 0
    if args.command == "run":
        try:
            return _cmd_run(args)
        except ConfigError as exc:
            print(f"config error: {exc}", file=sys.stderr)
            return 2
        except OSError as exc:
            print(f"config error: cannot write output: {exc}", file=sys.stderr)
            return 2
    if args.command == "validate":
        results = run_validation(stream=sys.stdout)
        return 0 if all(r.passed for r in results) else 1
    parser.print_help()
    return 2


if __name__ == "__main__":
    sys.exit(main())
