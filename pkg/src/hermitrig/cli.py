"""Command-line interface: ``hermitrig build | eval | verify | convergence | golden``.

Exit codes: 0 success, 1 verification or solver failure, 2 input error.
"""

import argparse
import logging
import sys

import numpy as np

from . import __version__
from .core import SingularSystemError, build_hermite
from .evaluate import evaluate_many
from .functions import BUILTIN
from .io import (
    InputError,
    format_csv,
    format_float,
    parse_points,
    poly_to_json,
    read_poly,
    read_samples,
    write_text,
)
from .oracle import collocation_solve
from .study import coefficient_gap, convergence_study, node_residuals

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
VERIFY_TOL = 1e-7
DEFAULT_MODE = "paper"


def _emit(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        write_text(path, text)


def _mode(args, file_mode):
    return args.mode or file_mode or DEFAULT_MODE


def cmd_build(args):
    samples, file_mode = read_samples(args.input)
    poly = build_hermite(samples, _mode(args, file_mode), method=args.method, verbose=args.verbose)
    _emit(poly_to_json(poly), args.output)
    return EXIT_OK


def cmd_eval(args):
    poly = read_poly(args.coeffs)
    if args.order < 0:
        raise InputError("--order must be nonnegative")
    ts = parse_points(args.points)
    values = evaluate_many(poly, ts, args.order)
    _emit(format_csv(["t", "value"], zip(ts, values)), args.output)
    return EXIT_OK


def cmd_verify(args):
    samples, file_mode = read_samples(args.input)
    mode = _mode(args, file_mode)
    fast = build_hermite(samples, mode)
    dense = collocation_solve(samples, mode)
    r_fast = node_residuals(fast, samples)
    r_dense = node_residuals(dense, samples)
    gap = coefficient_gap(fast, dense)
    scale = max(1.0, float(np.abs(samples.rows).max()))

    rows = [(m, r_fast[m], r_dense[m]) for m in range(samples.p + 1)]
    out = format_csv(["order", "fast_residual", "oracle_residual"], rows)
    out += f"coefficient_gap,{format_float(gap)}\n"
    worst = max(r_fast.max(), r_dense.max()) / scale
    ok = worst <= VERIFY_TOL
    out += f"status,{'ok' if ok else 'FAIL'}\n"
    sys.stdout.write(out)
    return EXIT_OK if ok else EXIT_FAIL


def _int_list(text):
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_convergence(args):
    if args.function not in BUILTIN:
        raise InputError(f"unknown function {args.function!r}; choose from {', '.join(sorted(BUILTIN))}")
    if any(n < 1 for n in args.n):
        raise InputError("every n must be >= 1")
    report = convergence_study(args.function, args.p, args.grid, args.n, mode=args.mode or DEFAULT_MODE)
    header = ["function", "p", "grid", "n", "N"]
    header += [f"residual_order_{m}" for m in range(args.p + 1)]
    header += ["fine_error", "seconds"]
    rows = [
        [r.function, r.p, r.family, r.n, 2 * r.n + 1, *r.node_residuals, r.fine_error, r.seconds]
        for r in report
    ]
    _emit(format_csv(header, rows), args.output)
    return EXIT_OK


def cmd_golden(args):
    from .golden import golden_suite

    summary = golden_suite()
    for line in summary.lines():
        print(line)
    return EXIT_OK if summary.ok else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hermitrig",
        description="Hermite trigonometric interpolation on uniform periodic grids.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    mode_kw = dict(choices=["strict", "paper"], default=None,
                   help="centering mode (default: file's mode, else paper)")

    p = sub.add_parser("build", help="build a polynomial from a sample file")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--mode", **mode_kw)
    p.add_argument("--method", choices=["direct", "fft"], default="direct")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("eval", help="evaluate a coefficient file")
    p.add_argument("-c", "--coeffs", required=True)
    p.add_argument("--points", required=True, help="start:stop:count (inclusive) or t1,t2,...")
    p.add_argument("--order", type=int, default=0)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="compare the fast build with the dense oracle")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--mode", **mode_kw)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convergence", help="error study for a builtin function")
    p.add_argument("--function", required=True, help=", ".join(sorted(BUILTIN)))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--grid", type=int, choices=[0, 1], default=0)
    p.add_argument("--n", type=_int_list, default=[])
    p.add_argument("--mode", **mode_kw)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_convergence)

    p = sub.add_parser("golden", help="run the worked-example checks")
    p.set_defaults(func=cmd_golden)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "verbose", False):
        logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        # InputError and NonCenteredError are ValueErrors
        print(f"hermitrig: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SingularSystemError as exc:
        print(f"hermitrig: solver failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
