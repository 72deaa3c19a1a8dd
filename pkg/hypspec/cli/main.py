"""Command-line entry point.

Exit status: 0 all checks pass, 1 verification failures, 2 usage errors,
3 I/O errors.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from .commands import cmd_classify, cmd_verify
from .config import OUTPUT_FORMATS, RunConfig
from .export import EXPORT_KINDS, cmd_export, write_report
from .report import Report
from .suites import SUITE_NAMES
from .. import __version__
from ..utils.constants import DEFAULT_TOLERANCES
from ..utils.errors import UsageError

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _tolerance_flag(name: str) -> str:
    # "series_tol" -> "--tol-series"
    return "--tol-" + name.removesuffix("_tol").replace("_", "-")


def _common_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    sweep = parser.add_argument_group("sweep")
    sweep.add_argument("--n", type=int, help="Single hyperboloid dimension n.")
    sweep.add_argument(
        "--n-range", type=int, nargs=2, metavar=("LO", "HI"), help="Range of n, inclusive."
    )
    sweep.add_argument(
        "--lambda", dest="lambdas", nargs="*", action="extend", metavar="VALUE",
        help='Values of λ, exact ("5/2") or floating; given without values for an empty sweep.',
    )
    sweep.add_argument(
        "--lambda-offset", dest="offsets", nargs="+", action="extend", metavar="K",
        help="Exact offsets k with λ = ρ + k.",
    )
    sweep.add_argument("--j-max", type=int, help="Largest K-type index.")
    sweep.add_argument(
        "--grid", type=float, nargs=3, metavar=("START", "STOP", "NUM"), help="t-grid of the checks."
    )
    sweep.add_argument("--workers", type=int, help="Worker processes for the sweep.")

    tolerances = parser.add_argument_group("tolerances")
    for name in DEFAULT_TOLERANCES:
        tolerances.add_argument(
            _tolerance_flag(name), dest=name, type=float, metavar="TOL",
            help=f"Default {DEFAULT_TOLERANCES[name]:g}.",
        )

    output = parser.add_argument_group("output")
    output.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS, default="text")
    output.add_argument("--out", help="Output file, or directory for a generated file name.")
    return parser


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="hypspec",
        description="Discrete series of the hyperboloid: classification and verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("classify", parents=[common], help="Discrete-series table.")

    verify = commands.add_parser("verify", parents=[common], help="Run verification suites.")
    verify.add_argument(
        "--suite", dest="suites", action="append", choices=SUITE_NAMES,
        help="Suite to run (repeatable); all by default.",
    )

    export = commands.add_parser("export", parents=[common], help="Write a table, report or profiles.")
    export.add_argument("--what", choices=EXPORT_KINDS, default="table")
    export.add_argument(
        "--suite", dest="suites", action="append", choices=SUITE_NAMES,
        help="Suites of a report export (repeatable); all by default.",
    )
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Assemble a :class:`RunConfig` from parsed flags.

    Raises
    ------
    UsageError
        If flags conflict or fail validation.
    """
    if args.n is not None and args.n_range is not None:
        raise UsageError("--n and --n-range are mutually exclusive")
    kwargs = {}
    if args.n is not None:
        kwargs["n_range"] = (args.n, args.n)
    elif args.n_range is not None:
        kwargs["n_range"] = tuple(args.n_range)
    if args.lambdas is not None:
        kwargs["lambdas"] = tuple(args.lambdas)
    if args.offsets is not None:
        kwargs["offsets"] = tuple(args.offsets)
    if args.j_max is not None:
        kwargs["j_max"] = args.j_max
    if args.grid is not None:
        start, stop, size = args.grid
        if not size.is_integer():
            raise UsageError(f"Grid point count must be an integer, got {size}")
        kwargs["grid"] = (start, stop, int(size))
    tolerances = {
        name: getattr(args, name) for name in DEFAULT_TOLERANCES if getattr(args, name) is not None
    }
    return RunConfig(
        tolerances=tolerances,
        output_format=args.output_format,
        workers=args.workers,
        **kwargs,
    )


def _emit(report: Report, config: RunConfig, out: str | None) -> None:
    if out is None:
        sys.stdout.write(report.render(config.output_format))
    else:
        write_report(report, out, config.output_format)
    failures = [check for check in report.checks if check.name == "error"]
    for check in failures:
        print(f"[error] {check.suite} {check.parameters}: {check.note}", file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors and 0 for --help/--version
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        config = config_from_args(args)
        if args.command == "classify":
            report = cmd_classify(config)
        elif args.command == "verify":
            report = cmd_verify(config, args.suites)
        else:
            if args.out is None:
                raise UsageError("export needs --out")
            path = cmd_export(config, args.what, args.out, args.suites)
            print(f"Written to {path}")
            return EXIT_OK
        _emit(report, config, args.out)
    except UsageError as exc:
        print(f"[usage] {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"[io] {exc}", file=sys.stderr)
        return EXIT_IO
    return report.exit_status


if __name__ == "__main__":
    sys.exit(main())
