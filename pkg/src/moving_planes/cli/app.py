"""Command-line front end for Moving Planes."""

import argparse
import logging
import sys
from typing import Optional, Sequence

import pydantic

from moving_planes import __version__
from moving_planes.config import get_settings
from moving_planes.core.exceptions import (
    ConfigurationError,
    DomainError,
    ExportError,
    ParsingError,
    SuperluminalError,
    ValidationError,
)
from moving_planes.core.kinematics import frame_from_velocity
from moving_planes.core.models import (
    MAX_RAPIDITY,
    OrientedFrame,
    OutputFormat,
    SweepSpec,
    UnitVector2,
    Velocity,
    VerifySuite,
)
from moving_planes.exporters.report_exporter import ReportExporter
from moving_planes.parsers.multivector_parser import get_parser
from moving_planes.services.calculation_service import get_calculation_service
from moving_planes.services.sweep_service import get_sweep_service
from moving_planes.services.verification_service import get_verification_service

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class UsageError(Exception):
    """argparse rejected the command line."""

    def __init__(self, code: int):
        super().__init__(code)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def exit(self, status: int = 0, message: Optional[str] = None):
        if message:
            self._print_message(message, sys.stderr)
        raise UsageError(status)


def _add_format(parser: argparse.ArgumentParser, default: OutputFormat) -> None:
    parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=default.value,
        help=f"Output format (default: {default.value})",
    )


def _add_frame(parser: argparse.ArgumentParser, name: str, angle: str, velocity: str, speed: str) -> None:
    """Frame options: a rapidity, a velocity vector, or a speed, each with a direction angle."""
    group = parser.add_mutually_exclusive_group()
    group.add_argument(f"--{name}", type=float, help=f"Hyperbolic angle {name}")
    group.add_argument(f"--{velocity}", help="Velocity as 'x,y' (speed < 1)")
    group.add_argument(f"--{speed}", type=float, help="Speed (< 1) along the direction angle")
    parser.add_argument(f"--{angle}", type=float, default=0.0, help="Direction angle in radians")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="moving-planes",
        description="Geometric algebra of moving planes: compositions, boosts and checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    compose = commands.add_parser("compose", help="Compose two frames (G2 and G12 routes)")
    _add_frame(compose, "phi", "a-angle", "uv", "v-speed")
    _add_frame(compose, "rho", "b-angle", "uw", "w-speed")
    _add_format(compose, OutputFormat.TEXT)

    passive = commands.add_parser("passive", help="Passive boost taking one frame to another")
    _add_frame(passive, "phi", "a-angle", "uv", "v-speed")
    _add_frame(passive, "rho", "b-angle", "uw", "w-speed")
    _add_format(passive, OutputFormat.TEXT)

    boost = commands.add_parser("boost", help="Boost a G2 element")
    boost.add_argument("--target", required=True, help="Element, e.g. '1 + 0.5e1 - e12'")
    boost.add_argument("--dir-angle", type=float, default=0.0, help="Boost direction angle")
    boost.add_argument("--phi", type=float, required=True, help="Hyperbolic angle")
    mode = boost.add_mutually_exclusive_group()
    mode.add_argument("--active", dest="passive", action="store_false", help="e^{-phi a/2} x e^{phi a/2} (default)")
    mode.add_argument("--passive", dest="passive", action="store_true", help="e^{phi a/2} x e^{phi a/2}")
    boost.set_defaults(passive=False)
    _add_format(boost, OutputFormat.TEXT)

    for name, text in (
        ("classify", "Classify a zero-scalar G2 element"),
        ("matrix", "2x2 matrix of a G2 (or complexified G12) element"),
        ("dual", "Spacetime vector dual to a unit relative bivector"),
    ):
        sub = commands.add_parser(name, help=text)
        sub.add_argument("element", help="Element text or JSON")
        _add_format(sub, OutputFormat.TEXT)

    verify = commands.add_parser("verify", help="Run randomized invariant suites")
    verify.add_argument("--suite", choices=[s.value for s in VerifySuite], default=VerifySuite.ALL.value)
    verify.add_argument("--seed", type=int, default=None, help="Base seed (default from settings)")
    verify.add_argument("--count", type=int, default=None, help="Samples per invariant")
    _add_format(verify, OutputFormat.TEXT)

    sweep = commands.add_parser("sweep", help="Active versus passive comparison table")
    sweep.add_argument("--phi-range", default="0:1", help="start:stop")
    sweep.add_argument("--rho-range", default="0:1", help="start:stop")
    sweep.add_argument("--theta-range", default="0:3.141592653589793", help="start:stop")
    sweep.add_argument("--steps", type=int, default=5, help="Points per axis")
    sweep.add_argument("--workers", type=int, default=1, help="Threads evaluating rows")
    sweep.add_argument("--output", default=None, help="Write the table to a .csv or .xlsx file")
    _add_format(sweep, OutputFormat.CSV)

    return parser


def _configure_logging(verbose: int) -> None:
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        name = get_settings().log_level.upper()
        level = logging.getLevelName(name)
        if not isinstance(level, int):
            raise ConfigurationError(f"Unknown log level {name!r}")
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def _bounded(rapidity: float) -> float:
    if not abs(rapidity) <= MAX_RAPIDITY:
        raise SuperluminalError(f"Hyperbolic angles beyond {MAX_RAPIDITY} reach light speed, got {rapidity!r}")
    return rapidity


def _frame(rapidity: Optional[float], angle: float, velocity: Optional[str], speed: Optional[float]) -> OrientedFrame:
    if velocity is not None:
        return frame_from_velocity(Velocity.from_vector(get_parser().parse_vector(velocity)))
    if speed is not None:
        direction = UnitVector2.from_angle(angle)
        return frame_from_velocity(Velocity.of(speed * direction.v1, speed * direction.v2))
    return OrientedFrame.positive(UnitVector2.from_angle(angle), _bounded(rapidity or 0.0))


def _frames(args: argparse.Namespace) -> tuple[OrientedFrame, OrientedFrame]:
    j = _frame(args.phi, args.a_angle, args.uv, args.v_speed)
    k = _frame(args.rho, args.b_angle, args.uw, args.w_speed)
    return j, k


def _run(args: argparse.Namespace) -> int:
    fmt = OutputFormat(args.format)
    exporter = ReportExporter()
    parser = get_parser()
    calculations = get_calculation_service()

    if args.command == "compose":
        result = calculations.compose(*_frames(args))
    elif args.command == "passive":
        result = calculations.passive(*_frames(args))
    elif args.command == "boost":
        direction = UnitVector2.from_angle(args.dir_angle)
        result = calculations.boost(parser.parse_g2(args.target), direction, _bounded(args.phi), args.passive)
    elif args.command == "classify":
        result = calculations.classify(parser.parse_g2(args.element))
    elif args.command == "matrix":
        result = calculations.matrix(parser.parse_element(args.element))
    elif args.command == "dual":
        result = calculations.dual(parser.parse_g2(args.element))
    elif args.command == "verify":
        report = get_verification_service().run(VerifySuite(args.suite), args.seed, args.count)
        print(exporter.render(report, fmt))
        return EXIT_OK if report.passed else EXIT_VERIFY_FAILED
    else:
        spec = SweepSpec(
            phi_range=parser.parse_range(args.phi_range),
            rho_range=parser.parse_range(args.rho_range),
            theta_range=parser.parse_range(args.theta_range),
            steps=args.steps,
        )
        rows = get_sweep_service().run(spec, max(1, args.workers))
        if args.output:
            path = exporter.export_sweep(rows, args.output)
            logger.info(f"Wrote {len(rows)} rows to {path}")
            return EXIT_OK
        result = rows

    print(exporter.render(result, fmt))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point; returns the process exit code."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    try:
        _configure_logging(args.verbose)
    except ConfigurationError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return _run(args)
    except (ParsingError, ExportError, pydantic.ValidationError) as e:
        logger.warning(f"{type(e).__name__}: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ValidationError, ArithmeticError, ValueError) as e:
        logger.warning(f"{type(e).__name__}: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
