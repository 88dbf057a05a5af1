"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 invalid parameters, 3 certification
failure (a closed form disagreed with the oracle, which is always a bug).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import oracle
from .errors import CertificationError, QHilbertError, RootOfUnity
from .fib import ThetaParam, quantum_param_from_theta
from .field import format_rational, parse_rational
from .hankel import MatrixKind, build_matrix, closed_form_det, closed_form_inverse
from .qpoly import (
    MeasureSpec,
    PolyCoeffs,
    integrate_against_measure,
    kernel_coeffs,
    specialized_poly,
)
from .quantum import QuantumParam
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_CERT = 0, 1, 2, 3
DEFAULT_MAX_N = 24

_GAUSSIAN_RE = re.compile(r"^\s*(.*?)\s*\*?\s*i\s*$")


class InvalidParameters(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_gaussian(text):
    """``"p/q*i"`` (or ``"p/qi"``) -> the rational imaginary part."""
    m = _GAUSSIAN_RE.match(text)
    if not m:
        raise InvalidParameters(f"expected a pure-imaginary rational like '1/2*i', got {text!r}")
    body = m.group(1)
    if body in ("", "+"):
        return parse_rational(1)
    if body == "-":
        return parse_rational(-1)
    return parse_rational(body)


def max_n():
    raw = os.environ.get("QHILBERT_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise InvalidParameters(f"QHILBERT_MAX_N must be an integer, got {raw!r}")


def kind_from_args(args):
    given = [name for name in ("s_rational", "s_gaussian", "m")
             if getattr(args, name, None) is not None]
    if args.kind == "classical":
        if given:
            raise InvalidParameters("classical matrices take no --s-rational/--s-gaussian/--m")
        return MatrixKind.classical(args.alpha)
    if args.kind == "filbert":
        if given != ["m"]:
            raise InvalidParameters("filbert matrices require --m (and nothing else)")
        return MatrixKind.filbert(ThetaParam(args.m), args.alpha)
    if len(given) != 1:
        raise InvalidParameters(
            "quantum matrices need exactly one of --s-rational, --s-gaussian, --m")
    if args.s_rational is not None:
        p = QuantumParam.from_rational(args.s_rational)
    elif args.s_gaussian is not None:
        p = QuantumParam.from_gaussian(parse_gaussian(args.s_gaussian))
    else:
        p = quantum_param_from_theta(ThetaParam(args.m))
    return MatrixKind.quantum(p, args.alpha)


def _param_json(args):
    if getattr(args, "m", None) is not None:
        return {"m": args.m}
    if getattr(args, "s_rational", None) is not None:
        return {"s": format_rational(parse_rational(args.s_rational))}
    if getattr(args, "s_gaussian", None) is not None:
        return {"s": format_rational(parse_gaussian(args.s_gaussian)) + "*i"}
    return None


def _header(args, kind):
    return {"kind": kind.tag, "n": args.n, "alpha": format_rational(kind.alpha),
            "param": _param_json(args)}


def _emit_matrix(args, kind, M, out):
    if args.output == "csv":
        if not M.is_rational():
            raise InvalidParameters("CSV output requires a rational matrix; use --output json")
        out.write(M.to_csv() + "\n")
    elif args.output == "pretty":
        out.write(M.to_pretty() + "\n")
    else:
        doc = _header(args, kind)
        doc["matrix"] = M.to_json()
        out.write(json.dumps(doc) + "\n")


def _emit_scalar(args, kind, key, value, out, extra=None):
    if args.output == "csv":
        if not value.is_rational():
            raise InvalidParameters("CSV output requires a rational value; use --output json")
        out.write(format_rational(value.to_fraction()) + "\n")
    elif args.output == "pretty":
        out.write(str(value) + "\n")
    else:
        doc = _header(args, kind)
        doc[key] = value.to_json()
        doc.update(extra or {})
        out.write(json.dumps(doc) + "\n")


def cmd_matrix(args, kind, out):
    _emit_matrix(args, kind, build_matrix(kind, args.n), out)


def cmd_invert(args, kind, out):
    if args.method == "closed":
        M = closed_form_inverse(kind, args.n)
    else:
        M = oracle.exact_inverse(build_matrix(kind, args.n))
    _emit_matrix(args, kind, M, out)


def cmd_det(args, kind, out):
    if args.method == "closed":
        value = closed_form_det(kind, args.n)
    else:
        value = oracle.bareiss_det(build_matrix(kind, args.n))
    _emit_scalar(args, kind, "det", value, out)


def _quantum_alpha(kind):
    if kind.tag == "classical":
        raise InvalidParameters("this command needs a quantum or filbert kind")
    return kind.quantum_param, kind.alpha


def cmd_poly(args, kind, out):
    p, alpha = _quantum_alpha(kind)
    if args.kernel:
        _emit_matrix(args, kind, kernel_coeffs(args.n, alpha, p), out)
        return
    poly = specialized_poly(args.n, alpha, p)
    if args.output == "pretty":
        out.write(" ".join(str(c) for c in poly.coeffs) + "\n")
    elif args.output == "csv":
        if not all(c.is_rational() for c in poly.coeffs):
            raise InvalidParameters("CSV output requires rational coefficients; use --output json")
        out.write(",".join(format_rational(c.to_fraction()) for c in poly.coeffs) + "\n")
    else:
        doc = _header(args, kind)
        doc["coeffs"] = poly.to_json()
        out.write(json.dumps(doc) + "\n")


def cmd_integrate(args, kind, out):
    p, alpha = _quantum_alpha(kind)
    spec = MeasureSpec(alpha, p)
    if args.times is None:
        poly = PolyCoeffs([0] * args.n + [1], p.context)
    else:
        poly = specialized_poly(args.n, alpha, p) * specialized_poly(args.times, alpha, p)
    value = integrate_against_measure(poly, spec)
    _emit_scalar(args, kind, "value", value, out, {"converges": spec.converges()})


def cmd_verify(args, kind, out):
    results = run_suite(args.suite, kind, args.n)
    failed = 0
    for r in results:
        out.write(r.line() + "\n")
        failed += not r.ok
    out.write(f"{len(results) - failed}/{len(results)} passed\n")
    if failed:
        raise CertificationError(f"{failed} case(s) failed in suite {args.suite}")


COMMANDS = {
    "matrix": cmd_matrix,
    "invert": cmd_invert,
    "det": cmd_det,
    "poly": cmd_poly,
    "integrate": cmd_integrate,
    "verify": cmd_verify,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--kind", choices=("classical", "quantum", "filbert"), default="quantum")
    common.add_argument("--n", type=int, required=True, help="index bound; matrices are (n+1)x(n+1)")
    common.add_argument("--alpha", default="1", help="shift parameter, exact rational 'p/q'")
    common.add_argument("--s-rational", dest="s_rational", help="s = q^(1/2) as a rational 'p/q'")
    common.add_argument("--s-gaussian", dest="s_gaussian", help="s as a pure-imaginary rational 'p/q*i'")
    common.add_argument("--m", type=int, help="theta-form: 2 sinh(theta) = m")
    common.add_argument("--output", choices=("json", "csv", "pretty"), default="json")

    parser = _Parser(prog="qhilbert", description="Exact quantum Hilbert and Filbert matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("matrix", parents=[common], help="build the matrix")
    for name, text in (("invert", "inverse matrix"), ("det", "determinant")):
        sp = sub.add_parser(name, parents=[common], help=text)
        sp.add_argument("--method", choices=("closed", "oracle"), default="closed")
    sp = sub.add_parser("poly", parents=[common], help="orthogonal polynomial coefficients")
    sp.add_argument("--kernel", action="store_true", help="emit kernel polynomial coefficients")
    sp = sub.add_parser("integrate", parents=[common],
                        help="integrate x^n, or p_n * p_times, against the measure")
    sp.add_argument("--times", type=int, help="integrate p_n * p_times instead of x^n")
    sp = sub.add_parser("verify", parents=[common], help="run an invariant suite for 0..n")
    sp.add_argument("--suite", choices=SUITES, required=True)
    return parser


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.n < 0:
            raise InvalidParameters("--n must be non-negative")
        limit = max_n()
        if args.n > limit:
            raise InvalidParameters(f"--n {args.n} exceeds QHILBERT_MAX_N={limit}")
        if getattr(args, "times", None) is not None and args.times < 0:
            raise InvalidParameters("--times must be non-negative")
        kind = kind_from_args(args)
        COMMANDS[args.command](args, kind, out)
    except CertificationError as exc:
        err.write(f"certification failure: {exc}\n")
        return EXIT_CERT
    except RootOfUnity as exc:
        err.write(f"invalid parameters: q is a root of unity of order {exc.order}\n")
        return EXIT_INVALID
    except (InvalidParameters, QHilbertError, ValueError, TypeError) as exc:
        err.write(f"invalid parameters: {exc}\n")
        return EXIT_INVALID
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
