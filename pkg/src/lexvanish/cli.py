"""Command line front end.

    lexvanish solve INSTANCE [--out F] [--render] [--verify] [--combine original|simplified]
    lexvanish intersect BASIS1 BASIS2 [--out F]
    lexvanish verify BASIS INSTANCE

Exit codes: 0 success, 1 validation error, 2 precondition violation,
3 internal assertion or failed verification.
"""

import argparse
import logging
import sys

from .errors import DimensionError, InvariantError, LexVanishError, PreconditionError, ValidationError
from .fileio import read_basis, read_instance, render_basis
from .intersection import ReducedBasis, standard_monomials, intersect
from .lowerset import LowerSet, render_staircase
from .vanishing import COMBINE_METHODS, solve
from .verify import VerificationReport, verify_solution

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_PRECONDITION = 2
EXIT_INTERNAL = 3


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(report, fmt, stream):
    text = report.json_lines() if fmt == "json-lines" else report.render_text()
    stream.write(text + "\n")


def cmd_solve(args):
    H = read_instance(args.instance)
    result = solve(H, method=args.combine)
    text = render_basis(result.basis, result.quotient, result.dim)
    if args.render:
        if result.dim == 2:
            pic = render_staircase(result.quotient)
            text += "".join(f"# {line}\n" for line in pic.splitlines())
        else:
            print(f"note: --render only draws dimension 2 (got {result.dim})", file=sys.stderr)
    _emit(text, args.out)
    if args.verify:
        report = verify_solution(result.basis, result.quotient, H)
        _report(report, args.format, sys.stdout if args.out else sys.stderr)
        if not report.overall:
            return EXIT_INTERNAL
    return EXIT_OK


def cmd_intersect(args):
    inputs = []
    for path in (args.basis1, args.basis2):
        b = read_basis(path)
        G = ReducedBasis(b.polynomials, b.dim)
        if b.quotient is not None and set(b.quotient) != G.quotient.elements:
            raise ValidationError(f"{path}: quotient line does not match the basis")
        inputs.append(G)
    G = intersect(*inputs)
    _emit(render_basis(G.basis, G.quotient, G.dim), args.out)
    return EXIT_OK


def cmd_verify(args):
    b = read_basis(args.basis)
    H = read_instance(args.instance)
    if b.dim != H.dim:
        raise DimensionError(f"basis has dimension {b.dim} but instance has {H.dim}")
    report = VerificationReport()
    if b.quotient is not None:
        D = LowerSet(b.quotient, b.dim)
    else:
        try:
            D = standard_monomials(b.polynomials, b.dim)
        except LexVanishError as exc:
            report.add("finite-quotient", False, str(exc))
            _report(report, args.format, sys.stdout)
            return EXIT_INTERNAL
    report.extend(verify_solution(b.polynomials, D, H))
    _report(report, args.format, sys.stdout)
    return EXIT_OK if report.overall else EXIT_INTERNAL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lexvanish",
        description="Reduced lex Groebner bases of ideals of points with multiplicity structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute the reduced lex basis and quotient basis of I(H)")
    p.add_argument("instance")
    p.add_argument("--out", help="write the basis file here instead of stdout")
    p.add_argument("--render", action="store_true", help="append an ASCII staircase (dimension 2)")
    p.add_argument("--verify", action="store_true", help="run the oracle suite on the result")
    p.add_argument("--combine", choices=COMBINE_METHODS, default="simplified")
    p.add_argument("--format", choices=("text", "json-lines"), default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("intersect", help="intersect two ideals given by reduced lex bases")
    p.add_argument("basis1")
    p.add_argument("basis2")
    p.add_argument("--out")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("verify", help="check a basis file against an instance")
    p.add_argument("basis")
    p.add_argument("instance")
    p.add_argument("--format", choices=("text", "json-lines"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (LexVanishError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
