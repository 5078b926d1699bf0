import argparse
import logging
import sys

from errors import ConvergenceError, CostGuardError, InvalidPointsError, NonFiniteIntegrandError, SingularMatrixError
from kernels.point_config import parse_points
from orchestrators import cdf, table, verify
from utils import load_config

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="airy-fredholm",
        description="Multipoint distribution of the parabolic Airy process by four determinant formulas.",
    )
    noise = parser.add_mutually_exclusive_group()
    noise.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    noise.add_argument("--quiet", action="store_true", help="warnings and errors only")
    parser.add_argument("--workers", type=int, help="thread pool size")
    parser.add_argument("--nodes", type=int, help="Gauss-Legendre nodes per ray (AF_NODES)")
    parser.add_argument("--truncation", type=float, help="arc-length cutoff of cubic-decay rays (AF_TRUNCATION)")
    parser.add_argument("--lambda-max", type=float, help="half-line truncation (AF_LAMBDA_MAX)")
    parser.add_argument("--z-radius", type=float, help="radius of the z-circles (AF_Z_RADIUS)")
    parser.add_argument("--tol", type=float, help="check tolerance (AF_TOL)")
    parser.add_argument("--strict", action="store_true", help="raise on non-converged refinements")
    parser.add_argument("--out", choices=("text", "json"), default="text", help="report format")

    commands = parser.add_subparsers(dest="command", required=True)

    p_cdf = commands.add_parser("cdf", help="joint CDF at alpha:beta points")
    p_cdf.add_argument("--points", required=True, help='comma-separated "alpha:beta" pairs')
    p_cdf.add_argument("--method", choices=cdf.METHODS, default="b-minus-a")
    p_cdf.add_argument("--compare", action="store_true", help="run all four methods side by side")
    p_cdf.add_argument("--cutoff", type=int, help="liu-sum cutoff on n_1 + ... + n_m")

    p_table = commands.add_parser("table", help="CSV tables")
    p_table.add_argument("target", choices=table.TARGETS)
    p_table.add_argument("--from", dest="start", type=float, default=-5.0)
    p_table.add_argument("--to", dest="stop", type=float, default=2.0)
    p_table.add_argument("--step", type=float, default=1.0)
    p_table.add_argument("--fix", help='first point of a joint slice, "alpha:beta"')
    p_table.add_argument("--alpha2", type=float, default=1.0)
    p_table.add_argument("--method", choices=cdf.METHODS, default="b-minus-a")
    p_table.add_argument("--cutoff", type=int)

    p_verify = commands.add_parser("verify", help="verification suites")
    p_verify.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    return parser


def configure_logging(args) -> None:
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format='%(asctime)s - %(levelname)s - %(message)s', stream=sys.stderr)


def emit(report, args) -> None:
    sys.stdout.write(report.to_json() if args.out == "json" else report.to_text())


def report_exit_code(report) -> int:
    """EXIT_NUMERICAL when any check did not converge, else pass or fail."""
    if not report.converged:
        for c in report.unconverged:
            logger.error(f"Not converged: {c.suite}.{c.check} (estimate {c.error_estimate:.3e})")
        return EXIT_NUMERICAL
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def dispatch(args) -> int:
    config = load_config({
        "ray_nodes": args.nodes,
        "truncation": args.truncation,
        "lambda_max": args.lambda_max,
        "z_radius": args.z_radius,
        "tol": args.tol,
        "workers": args.workers,
        "strict": True if args.strict else None,
    })
    command = " ".join(sys.argv[1:]) if sys.argv[1:] else args.command

    if args.command == "cdf":
        report = cdf.run(parse_points(args.points), args.method, config, args.compare, args.cutoff, command)
        emit(report, args)
        return report_exit_code(report)

    if args.command == "table":
        table.run(args.target, args.start, args.stop, args.step, config, fix=args.fix, alpha2=args.alpha2,
                  method=args.method, cutoff=args.cutoff)
        return EXIT_OK

    report = verify.run(args.suite, config, command)
    emit(report, args)
    for failure in report.failures:
        logger.warning(f"Check failed: {failure.suite}.{failure.check} ({failure.anchor})")
    return report_exit_code(report)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    configure_logging(args)

    try:
        return dispatch(args)
    except (InvalidPointsError, CostGuardError, ValueError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except (ConvergenceError, SingularMatrixError, NonFiniteIntegrandError) as e:
        logger.error(f"Numerical failure: {e}")
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
