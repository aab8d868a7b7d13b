"""This module runs the entire application."""
import argparse
import logging
import sys
from typing import List
from typing import Optional
from typing import Sequence

from asai_local import archimedean
from asai_local.config import load_config
from asai_local.formatter_ import Formatter
from asai_local.formatter_ import format_complex
from asai_local.parser_ import ConfigError
from asai_local.settings import load_settings
from asai_local.suites import SUITES
from asai_local.suites import SuiteRun
from asai_local.suites import contour_check
from asai_local.suites import run_suites
from asai_local.suites import tate_check


logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    """Raised for command-line values argparse cannot check by itself."""


def parse_complex(text: str) -> complex:
    """Reads ``0.4``, ``0.3+0.2i`` or ``0.3+0.2j``."""
    try:
        return complex(text.strip().replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asai-local",
        description="Exact local Asai L-, epsilon- and gamma-factors and their verification.",
    )
    parser.add_argument("--verbose", action="store_true", help="log per-suite timing to stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    factors = subparsers.add_parser("factors", help="print the factors of one configured case")
    factors.add_argument("--config", required=True, help="path of a key = value config file")

    verify = subparsers.add_parser("verify", help="run verification suites")
    verify.add_argument("--suite", required=True, choices=[*SUITES, "all"])
    verify.add_argument("--config", help="run the suites on this case instead of random ones")
    verify.add_argument("--seed", type=int)
    verify.add_argument("--depth", type=int, help="the truncation degree N")
    verify.add_argument("--n-max", type=int, dest="n_max", help="the largest rank drawn")
    verify.add_argument("--summary", help="write a YAML summary to this path")

    tate = subparsers.add_parser("tate", help="check Tate's functional equation at one point")
    tate.add_argument("--char", required=True, dest="char", help="trivial, sgn, or <R|C>,<sign>,<s0>")
    tate.add_argument("--s", required=True, type=parse_complex, dest="s")
    tate.add_argument("--testfn", choices=archimedean.TEST_FUNCTIONS)

    contour = subparsers.add_parser("contour", help="reconstruct exp(s^2) from a vertical line")
    contour.add_argument("--D", required=True, type=float, dest="D")
    contour.add_argument("--s", required=True, type=parse_complex, dest="s")
    contour.add_argument("--x-max", type=float, dest="x_max")
    return parser


def run_command(argv: Optional[Sequence[str]] = None) -> int:
    """Runs one subcommand and returns its exit code.

    Returns
    -------
    int
        0 if every record passed, 1 if any failed, 2 for usage or
        config errors.
    """
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_PASS
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    load_settings()
    try:
        if args.command == "factors":
            return run_factors(args)
        if args.command == "verify":
            return run_verify(args)
        if args.command == "tate":
            return run_tate(args)
        return run_contour(args)
    except (ConfigError, UsageError, archimedean.ArchimedeanError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def run_factors(args: argparse.Namespace) -> int:
    config = load_config(args.config)
    format_ = Formatter()
    for line in format_.format_factors(config.name, config.rep, config.datum, config.tau):
        print(line)
    return EXIT_PASS


def run_verify(args: argparse.Namespace) -> int:
    config = load_config(args.config) if args.config else None
    if args.depth is not None and args.depth < 0:
        raise UsageError(f"--depth must be nonnegative, got {args.depth}")
    if args.n_max is not None and args.n_max < 1:
        raise UsageError(f"--n-max must be positive, got {args.n_max}")
    seed = args.seed if args.seed is not None else (config.seed if config else None)
    depth = args.depth if args.depth is not None else (config.truncation if config else None)
    run = SuiteRun(seed, depth, args.n_max, config)
    logger.debug("verify suite=%s seed=%s depth=%s n_max=%s", args.suite, run.seed, run.depth, run.n_max)

    results = run_suites([args.suite], run)
    format_ = Formatter()
    failed = False
    for reports in results.values():
        for line in format_(reports):
            print(line)
        failed = failed or any(not report.passed for report in reports)
    if args.summary:
        with open(args.summary, "w", encoding="utf8") as file:
            file.write(format_.format_summary(results))
    return EXIT_FAIL if failed else EXIT_PASS


def run_tate(args: argparse.Namespace) -> int:
    chi = archimedean.ArchCharacter.parse(args.char)
    L = archimedean.arch_asai_L_n1(chi) if chi.field == "C" else archimedean.tate_L(chi)
    chi = archimedean.restrict_to_real(chi)
    testfn = args.testfn or ("x_gaussian" if chi.sign else "gaussian")
    report = tate_check(chi, testfn, args.s)
    zeta = archimedean.tate_zeta_numeric(chi, testfn, args.s)
    report.params["L"] = L
    report.params["zeta"] = format_complex(zeta)
    print(Formatter().format_record(report))
    return EXIT_PASS if report.passed else EXIT_FAIL


def run_contour(args: argparse.Namespace) -> int:
    report = contour_check(args.D, args.s, args.x_max)
    print(Formatter().format_record(report))
    return EXIT_PASS if report.passed else EXIT_FAIL


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run_command(argv))


if __name__ == "__main__":
    main()
