"""Command-line interface.

Subcommands: groebner (reduced Groebner basis of a code ideal),
standard-basis (closed-form or Mora-computed standard basis of the
translated ideal), verify (three-check report on the closed form), and
nf (normal form of a polynomial against a basis file).

Exit codes: 0 success, 1 verification failure, 2 malformed input.
Polynomials are printed one per line in canonical form; --trace sends
reduction events to stderr, so stdout stays byte-stable.
"""

from __future__ import annotations

import argparse
import random
import re
import sys
from pathlib import Path

from .buchberger import groebner, reduce_basis
from .codes import (
    MatrixFormatError,
    closed_form_basis,
    lex_code_basis,
    parse_matrix,
    random_matrix,
    translated_generators,
    verify_closed_form,
)
from .division import divide
from .monomials import Order
from .mora import standard_basis, weak_normal_form
from .parsing import ParseError, parse_poly, print_poly
from .poly import Ring

_ORDER_CHOICES = [o.value for o in Order]


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _make_trace(enabled: bool):
    if not enabled:
        return None
    return lambda message: print(f"# {message}", file=sys.stderr)


def _load_basis_file(text: str, order: Order):
    """Basis file: first line 'p=<prime> n=<int>', then one polynomial per line."""
    lines = []
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append(stripped)
    if not lines:
        raise ParseError("empty basis file", 1, 1)
    m = re.fullmatch(r"p=(\d+)\s+n=(\d+)", lines[0])
    if not m:
        raise ParseError(f"expected 'p=<prime> n=<int>' header, got {lines[0]!r}", 1, 1)
    ring = Ring(int(m.group(1)), int(m.group(2)), order)
    return ring, [parse_poly(line, ring) for line in lines[1:]]


def cmd_groebner(args) -> int:
    G = parse_matrix(_read(args.matrix))
    order = Order(args.order)
    gens = lex_code_basis(G)
    if order is not Order.LEX:
        ring = Ring(G.p, G.n, order)
        gens = [ring.convert(f) for f in gens]
    basis = reduce_basis(groebner(gens, trace=_make_trace(args.trace)))
    for f in basis:
        print(print_poly(f))
    return 0


def cmd_standard_basis(args) -> int:
    G = parse_matrix(_read(args.matrix))
    order = Order(args.order)
    if not order.is_local:
        raise ValueError(f"standard-basis needs a local order, got {order.value}")
    if args.method == "closed-form":
        basis = closed_form_basis(G)
    else:
        basis = standard_basis(translated_generators(G), trace=_make_trace(args.trace))
    for f in basis:
        print(print_poly(f))
    return 0


def _print_report(report) -> None:
    for label, ok in [
        ("generators-match", report.generators_match),
        ("standard-basis", report.standard_basis_ok),
        ("leading-terms", report.leading_terms_ok),
    ]:
        print(f"{label}: {'PASS' if ok else 'FAIL'}")
    if not report.ok and report.detail:
        print(f"detail: {report.detail}")


def cmd_verify(args) -> int:
    if (args.matrix is None) == (args.random is None):
        raise ValueError("give either a matrix file or --random N")
    if args.matrix is not None:
        G = parse_matrix(_read(args.matrix))
        report = verify_closed_form(G, drop_index=args.inject_drop)
        _print_report(report)
        return 0 if report.ok else 1
    rng = random.Random(args.seed)
    failures = 0
    for index in range(args.random):
        p = rng.choice((2, 3, 5))
        k = rng.randint(1, 3)
        n = rng.randint(k, 6)
        G = random_matrix(rng, p, k, n)
        report = verify_closed_form(G)
        status = "OK" if report.ok else "FAIL"
        print(f"[{index}] p={p} k={k} n={n}: {status}")
        if not report.ok:
            failures += 1
            print(f"detail: {report.detail}")
    print(f"verified {args.random - failures}/{args.random}")
    return 0 if failures == 0 else 1


def cmd_nf(args) -> int:
    order = Order(args.order)
    ring, basis = _load_basis_file(_read(args.basis), order)
    f = parse_poly(args.poly, ring)
    trace = _make_trace(args.trace)
    if order.is_local:
        result = weak_normal_form(f, basis, trace=trace)
        print(f"NF: {print_poly(result.normal_form)}")
        print(f"unit: {print_poly(result.unit)}")
    else:
        remainder = divide(f, basis, trace=trace).remainder
        print(f"NF: {print_poly(remainder)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codegb",
        description="Exact Groebner and standard bases for binomial ideals of linear codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_groe = sub.add_parser("groebner", help="reduced Groebner basis of the code ideal")
    p_groe.add_argument("matrix", help="generator matrix file")
    p_groe.add_argument("--order", choices=_ORDER_CHOICES, default="lex")
    p_groe.add_argument("--trace", action="store_true", help="dump reduction steps to stderr")
    p_groe.set_defaults(func=cmd_groebner)

    p_std = sub.add_parser(
        "standard-basis", help="standard basis of the translated code ideal"
    )
    p_std.add_argument("matrix", help="generator matrix file")
    p_std.add_argument("--method", choices=["closed-form", "mora"], default="closed-form")
    p_std.add_argument("--order", choices=_ORDER_CHOICES, default="negdeglex")
    p_std.add_argument("--trace", action="store_true", help="dump reduction steps to stderr")
    p_std.set_defaults(func=cmd_standard_basis)

    p_ver = sub.add_parser("verify", help="verify the closed-form standard basis")
    p_ver.add_argument("matrix", nargs="?", help="generator matrix file")
    p_ver.add_argument(
        "--inject-drop",
        type=int,
        nargs="?",
        const=0,
        default=None,
        metavar="IDX",
        help="drop one closed-form element first (negative control)",
    )
    p_ver.add_argument("--random", type=int, metavar="N", help="verify N random matrices")
    p_ver.add_argument("--seed", type=int, default=0, help="seed for --random")
    p_ver.set_defaults(func=cmd_verify)

    p_nf = sub.add_parser("nf", help="normal form of a polynomial against a basis file")
    p_nf.add_argument("poly", help="polynomial, e.g. 'X1+2X4^2'")
    p_nf.add_argument("basis", help="basis file: 'p=<prime> n=<int>' header, one polynomial per line")
    p_nf.add_argument("--order", choices=_ORDER_CHOICES, default="lex")
    p_nf.add_argument("--trace", action="store_true", help="dump reduction steps to stderr")
    p_nf.set_defaults(func=cmd_nf)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, MatrixFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
