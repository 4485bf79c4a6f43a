"""ngqm command line.

Exit codes: 0 success, 1 usage error, 2 computation error, 3 verification
failures (``verify`` only).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .constants import ELECTRON_REST_ENERGY_EV, load_constants
from .errors import ConfigError, NGQMError, NoBoundStatesError
from .geometry import GeometryOrder
from .reports import (
    render,
    run_dispersion,
    run_spectrum,
    run_state_dump,
    run_table_audit,
    run_uncertainty,
    run_verify,
    verify_failed,
)

EXIT_OK, EXIT_USAGE, EXIT_COMPUTATION, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _geometry(text):
    try:
        return GeometryOrder.parse(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _nonneg_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text!r}")
    return value


def _mass(text):
    if text.lower() == "electron":
        return ELECTRON_REST_ENERGY_EV
    return _positive_float(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json", "text"), default=None,
                        help="csv (default) or json; verify also accepts text (its default)")
    common.add_argument("--out", type=Path, help="write to this file instead of stdout")
    common.add_argument("--config", type=Path,
                        help="constants file (key = value); falls back to $NGQM_CONFIG")
    common.add_argument("--mass", type=_mass, default=None,
                        help="'electron' or a rest energy m c^2 in eV")
    common.add_argument("--paper-constants", action="store_true",
                        help="reserved; not implemented")

    well = argparse.ArgumentParser(add_help=False)
    well.add_argument("--geometry", type=_geometry, required=True,
                      help="2G|3G|4G|5G or j=N")
    well.add_argument("--width", type=_positive_float, default=1.0, help="well width l in nm")
    well.add_argument("--textbook-3g", action="store_true",
                      help="use the sin((n+1) pi x / l) family for 3G")

    parser = _Parser(prog="ngqm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", parents=[common, well], help="bound-state energies")
    p.add_argument("--levels", type=int, default=5)

    p = sub.add_parser("uncertainty", parents=[common, well], help="generalized uncertainties")
    p.add_argument("--n", type=_nonneg_int, default=0)

    p = sub.add_parser("state-dump", parents=[common, well], help="sampled phi_n(x)")
    p.add_argument("--n", type=_nonneg_int, default=0)
    p.add_argument("--points", type=int, default=257)

    p = sub.add_parser("dispersion", parents=[common], help="E(k) curve")
    p.add_argument("--geometry", type=_geometry, required=True)
    p.add_argument("--k-max", type=_positive_float, default=10.0, help="1/nm")
    p.add_argument("--points", type=int, default=50)

    p = sub.add_parser("table-audit", parents=[common], help="audit the published energy table")
    p.add_argument("--widths", type=_positive_float, nargs="+", default=None)

    sub.add_parser("verify", parents=[common], help="run the verification suite")
    return parser


def _constants(args):
    constants = load_constants(args.config)
    if args.mass is not None:
        constants = constants.with_rest_energy(args.mass)
    return constants


def _dispatch(args, constants):
    if args.command == "spectrum":
        if args.levels < 1:
            raise UsageError("--levels must be >= 1")
        return run_spectrum(args.geometry, args.width, args.levels, constants, args.textbook_3g)
    if args.command == "uncertainty":
        return run_uncertainty(args.geometry, args.width, args.n, constants, args.textbook_3g)
    if args.command == "state-dump":
        if args.points < 256:
            raise UsageError("--points must be >= 256")
        return run_state_dump(args.geometry, args.width, args.n, constants,
                              args.textbook_3g, args.points)
    if args.command == "dispersion":
        if args.points < 1:
            raise UsageError("--points must be >= 1")
        return run_dispersion(args.geometry, args.k_max, args.points, constants)
    if args.command == "table-audit":
        return run_table_audit(constants, args.widths)
    return run_verify(constants)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.paper_constants:
            raise UsageError("--paper-constants is reserved and not implemented")
        fmt = args.format or ("text" if args.command == "verify" else "csv")
        if fmt == "text" and args.command != "verify":
            raise UsageError("--format text is only available for verify")
        if getattr(args, "textbook_3g", False) and args.geometry.j != 2:
            raise UsageError("--textbook-3g applies to 3G only")
        constants = _constants(args)
        report = _dispatch(args, constants)
    except (UsageError, ConfigError) as exc:
        print(f"ngqm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NoBoundStatesError as exc:
        print(f"ngqm: no bound states: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION
    except NGQMError as exc:
        print(f"ngqm: computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION

    text = render(report, fmt)
    if args.out is not None:
        try:
            args.out.write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"ngqm: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    if args.command == "verify" and verify_failed(report):
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
