"""Command-line front end.

Subcommands:

    normalize     parse an expression and print its normal form
    trace-reduce  coordinates of a homogeneous element in its trace piece
    dims          trace dimension table against the free-polynomial count
    hall-bracket  bracket of two generator points
    fock-matrix   matrix blocks of an operator expression
    verify        run one named verification suite

Exit codes: 0 success, 1 verification failure, 2 usage error (including
expression syntax errors).  JSON output is emitted with sorted keys and
deterministic case ordering; the wall_time field of verify reports is
the only varying content.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import affine, fock, hall, hecke, symfunc, trace
from .expr import Context, ExprError, parse_and_evaluate, print_element
from .scalars import Scalar
from .suites import SUITE_NAMES, run_suite

USAGE_ERROR = 2
VERIFY_FAILURE = 1


def _scalar_str(c):
    return str(c)


def element_json(value, ctx):
    if isinstance(value, Scalar):
        return {"scalar": _scalar_str(value)}
    if ctx.algebra == "hecke":
        return {
            "algebra": "hecke",
            "rank": value.rank,
            "terms": [
                {"perm": list(w), "coeff": _scalar_str(c)}
                for w, c in sorted(value.terms.items())
            ],
        }
    if ctx.algebra == "affine":
        return {
            "algebra": "affine",
            "rank": value.rank,
            "terms": [
                {
                    "exponents": list(e),
                    "perm": list(w),
                    "coeff": _scalar_str(c),
                }
                for (e, w), c in sorted(value.terms.items())
            ],
        }
    if ctx.algebra == "hall":
        return {
            "algebra": "hall",
            "terms": [
                {
                    "monomial": [[a, b] for a, b in mono],
                    "coeff": _scalar_str(c),
                }
                for mono, c in sorted(value.terms.items())
            ],
        }
    if ctx.algebra == "sym":
        return {
            "algebra": "sym",
            "truncation": value.N,
            "basis": value.basis,
            "terms": [
                {"partition": list(lam), "coeff": _scalar_str(c)}
                for lam, c in sorted(value.terms.items())
            ],
        }
    return fock_operator_json(value)


def fock_operator_json(op):
    blocks = {}
    for d in sorted(op.blocks):
        source = [list(lam) for lam in symfunc.partitions_of(d)]
        target_deg = d + op.shift
        target = (
            [list(lam) for lam in symfunc.partitions_of(target_deg)]
            if target_deg >= 0
            else []
        )
        matrix = [
            [_scalar_str(op.blocks[d].get(j, {}).get(i, Scalar.from_int(0)))
             for j in range(len(source))]
            for i in range(len(target))
        ]
        blocks[str(d)] = {"source": source, "target": target, "matrix": matrix}
    return {
        "algebra": "fock",
        "truncation": op.N,
        "shift": op.shift,
        "blocks": blocks,
    }


def _emit(payload, fmt):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(payload if isinstance(payload, str) else json.dumps(payload, sort_keys=True))


def _build_context(args, algebra=None):
    algebra = algebra or args.algebra
    try:
        return Context(
            algebra,
            rank=getattr(args, "rank", None),
            truncation=getattr(args, "truncation", None),
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _evaluate(expr_text, ctx):
    try:
        return parse_and_evaluate(expr_text, ctx)
    except ExprError as exc:
        start, end = exc.span
        print(f"error: {exc.message}", file=sys.stderr)
        print(f"  {expr_text}", file=sys.stderr)
        print("  " + " " * start + "^" * max(1, end - start), file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def cmd_normalize(args):
    ctx = _build_context(args)
    value = _evaluate(args.expr, ctx)
    if args.format == "json":
        _emit(element_json(value, ctx), "json")
    else:
        print(print_element(value, ctx))
    return 0


def cmd_trace_reduce(args):
    ctx = _build_context(args, "affine")
    value = _evaluate(args.expr, ctx)
    if isinstance(value, Scalar):
        value = affine.AffineElement.one(args.rank).scale(value)
    cache = trace.PieceCache(args.max_ambient_dim)
    degree = args.degree if args.degree is not None else value.degree()
    if degree < 0:
        print("error: the zero element has no degree; pass --degree",
              file=sys.stderr)
        return USAGE_ERROR
    try:
        piece = cache.get(args.rank, degree)
        cls = trace.reduce_element(value, piece)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    payload = {
        "rank": cls.rank,
        "degree": cls.degree,
        "coordinates": [_scalar_str(c) for c in cls.coords],
        "quotient_basis": [
            {"exponents": list(e), "perm": list(w)}
            for e, w in (piece.basis[j] for j in piece.quotient_cols)
        ],
        "is_zero": cls.is_zero(),
    }
    _emit(payload, args.format)
    return 0


def cmd_dims(args):
    cache = trace.PieceCache(args.max_ambient_dim)
    try:
        table = trace.dimension_table(args.max_rank, args.max_degree, cache)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.format == "csv":
        print("rank,degree,computed,expected,match")
        for (n, d), cell in sorted(table.items()):
            print(f"{n},{d},{cell['computed']},{cell['expected']},{cell['match']}")
    else:
        payload = {
            f"{n},{d}": cell for (n, d), cell in sorted(table.items())
        }
        _emit(payload, "json")
    return 0 if all(cell["match"] for cell in table.values()) else VERIFY_FAILURE


def _parse_point(text):
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"expected a point like [a,b], got {text!r}")
    parts = text[1:-1].split(",")
    if len(parts) != 2:
        raise ValueError(f"expected two coordinates in {text!r}")
    return int(parts[0]), int(parts[1])


def cmd_hall_bracket(args):
    try:
        x = _parse_point(args.x)
        y = _parse_point(args.y)
        result = hall.bracket(x, y)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    ctx = Context("hall")
    payload = {
        "x": list(x),
        "y": list(y),
        "bracket": element_json(result, ctx),
        "text": print_element(result, ctx),
    }
    _emit(payload, args.format)
    return 0


def cmd_fock_matrix(args):
    ctx = _build_context(args, "fock")
    value = _evaluate(args.expr, ctx)
    if isinstance(value, Scalar):
        value = fock.identity_operator(
            args.truncation, range(args.truncation + 1)
        ).scale(value)
    _emit(fock_operator_json(value), "json")
    return 0


def cmd_verify(args):
    params = {}
    if args.suite == "scalars":
        if args.max_degree is not None:
            params["max_gamma_delta"] = args.max_degree
    elif args.suite == "hecke":
        if args.max_rank is not None:
            params["max_n"] = args.max_rank
    elif args.suite == "affine":
        if args.max_rank is not None:
            params["max_n"] = args.max_rank
        if args.max_degree is not None:
            params["max_deg"] = args.max_degree
    elif args.suite == "trace-dims":
        if args.max_rank is not None:
            params["max_n"] = args.max_rank
        if args.max_degree is not None:
            params["max_d"] = args.max_degree
        params["max_ambient_dim"] = args.max_ambient_dim
    elif args.suite in ("hall-jacobi",):
        if args.max_rank is not None:
            params["max_a"] = args.max_rank
        if args.max_degree is not None:
            params["max_b"] = args.max_degree
    elif args.suite == "fock-relations":
        if args.truncation is not None:
            params["truncation"] = args.truncation
    elif args.suite == "fock-jm":
        if args.max_rank is not None:
            params["max_size"] = args.max_rank
    elif args.suite == "newton":
        if args.truncation is not None:
            params["truncation"] = args.truncation
    try:
        report = run_suite(args.suite, **params)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    _emit(report, "json")
    return 0 if not report["failures"] else VERIFY_FAILURE


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hecketrace",
        description=(
            "Exact computations in Hecke algebra towers, their trace, the "
            "positive elliptic Hall algebra, and its Fock representation."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, rank=False, truncation=False, degree=False, ambient=False):
        if rank:
            p.add_argument("--rank", type=int, help="algebra rank n")
        if truncation:
            p.add_argument(
                "--truncation", type=int, metavar="N",
                help="symmetric-function truncation degree",
            )
        if degree:
            p.add_argument("--degree", type=int, help="x-degree of the piece")
        if ambient:
            p.add_argument(
                "--max-ambient-dim", type=int,
                default=trace.DEFAULT_AMBIENT_CAP,
                help="resource guard on ambient piece dimension",
            )
        p.add_argument(
            "--format", choices=("json", "csv", "text"), default="json",
            help="output format",
        )

    p = sub.add_parser("normalize", help="normal form of an expression")
    p.add_argument(
        "--algebra", choices=("hecke", "affine", "hall", "sym"),
        required=True,
    )
    common(p, rank=True, truncation=True)
    p.add_argument("expr")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser(
        "trace-reduce", help="reduce a homogeneous element modulo commutators"
    )
    common(p, rank=True, degree=True, ambient=True)
    p.add_argument("expr")
    p.set_defaults(func=cmd_trace_reduce)

    p = sub.add_parser("dims", help="trace dimension table")
    p.add_argument("--max-rank", type=int, default=3)
    p.add_argument("--max-degree", type=int, default=4)
    common(p, ambient=True)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("hall-bracket", help="bracket of two generator points")
    p.add_argument("x", help='first point, e.g. "[1,0]"')
    p.add_argument("y", help='second point, e.g. "[0,1]"')
    common(p)
    p.set_defaults(func=cmd_hall_bracket)

    p = sub.add_parser("fock-matrix", help="matrix blocks of an operator")
    common(p, truncation=True)
    p.add_argument("expr", help='operator expression, e.g. "w[1,1]"')
    p.set_defaults(func=cmd_fock_matrix)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--max-rank", type=int, help="rank/size/point bound")
    p.add_argument("--max-degree", type=int, help="degree bound")
    common(p, truncation=True, ambient=True)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
