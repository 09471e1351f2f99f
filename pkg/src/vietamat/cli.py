"""Command-line front end.

Commands: build, det (with wronskian/jacobian shorthands), verify, bench.
Exit codes: 0 success or all checks passed, 1 verification failures,
2 input error, 3 size-guard violation.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .bench import METHODS, run_bench
from .calculus import (
    jacobian_det_closed,
    jacobian_matrix,
    nodal_basis,
    wronskian_closed,
    wronskian_matrix,
)
from .exactdet import LaplaceSizeError, det_bareiss, det_laplace
from .matio import load_nodes_file, matrix_to_csv, matrix_to_json, parse_nodes_text
from .rational import parse_rational, render_rational
from .structmat import (
    build_vandermonde,
    build_vieta,
    vandermonde_det_closed,
    vieta_det_closed,
)
from .sympoly import NodeSet
from .verify import VerifyConfig, run_suite

KINDS = ("vieta", "vandermonde", "wronskian", "jacobian")

_CLOSED_FORMS = {
    "vieta": vieta_det_closed,
    "vandermonde": vandermonde_det_closed,
    "wronskian": wronskian_closed,
    "jacobian": jacobian_det_closed,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vietamat",
        description="Exact structured-matrix builders, closed-form determinants, and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="build a matrix and emit it as JSON or CSV")
    p_build.add_argument("kind", choices=KINDS)
    _add_nodes_arguments(p_build)
    p_build.add_argument("--at", default="0", help="evaluation point for wronskian (rational, default 0)")
    p_build.add_argument("--format", choices=("json", "csv"), default="json")
    p_build.add_argument("--out", help="write to this path instead of stdout")
    p_build.set_defaults(handler=_cmd_build)

    p_det = sub.add_parser("det", help="evaluate a determinant by any method")
    p_det.add_argument("kind", choices=KINDS)
    _add_det_arguments(p_det)

    for alias in ("wronskian", "jacobian"):
        p_alias = sub.add_parser(alias, help=f"shorthand for: det {alias}")
        _add_det_arguments(p_alias, fixed_kind=alias)

    p_verify = sub.add_parser("verify", help="run randomized identity checks, one JSON line each")
    p_verify.add_argument("--suite", default="all", help="comma-separated identity names, or 'all'")
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=0, help="unsigned 64-bit master seed")
    p_verify.add_argument("--n", default="1..6", help="node-count range LO..HI (within 1..10)")
    p_verify.add_argument("--coeff-bound", type=int, default=50, help="numerator/denominator bound")
    p_verify.set_defaults(handler=_cmd_verify)

    p_bench = sub.add_parser("bench", help="time determinant methods, one CSV row per run")
    p_bench.add_argument("--n", required=True, help="comma-separated sizes, e.g. 4,8,16")
    p_bench.add_argument("--methods", default="closed,bareiss", help=f"subset of: {','.join(METHODS)}")
    p_bench.add_argument("--repeats", type=int, default=1)
    p_bench.add_argument("--entry-bits", type=int, default=16, help="bit length of numerators/denominators")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--out", help="write CSV to this path instead of stdout")
    p_bench.set_defaults(handler=_cmd_bench)

    return parser


def _add_nodes_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--nodes", help="inline comma-separated rationals, e.g. 1,2,-3/4")
    group.add_argument("--nodes-file", help='JSON file with schema {"nodes": ["1", "-3/4"]}')


def _add_det_arguments(parser: argparse.ArgumentParser, fixed_kind: str | None = None) -> None:
    _add_nodes_arguments(parser)
    parser.add_argument("--at", default="0", help="evaluation point for wronskian (rational, default 0)")
    parser.add_argument("--method", choices=("closed", "laplace", "bareiss"), default="closed")
    if fixed_kind is None:
        parser.set_defaults(handler=_cmd_det)
    else:
        parser.set_defaults(handler=_cmd_det, kind=fixed_kind)


def _resolve_nodes(args) -> NodeSet:
    if args.nodes is not None:
        return parse_nodes_text(args.nodes)
    return load_nodes_file(args.nodes_file)


def _build_matrix(kind: str, ns: NodeSet, at):
    if kind == "vieta":
        return build_vieta(ns)
    if kind == "vandermonde":
        return build_vandermonde(ns)
    if kind == "wronskian":
        return wronskian_matrix(nodal_basis(ns), at)
    return jacobian_matrix(ns)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _cmd_build(args) -> int:
    ns = _resolve_nodes(args)
    matrix = _build_matrix(args.kind, ns, parse_rational(args.at))
    if args.format == "csv":
        _emit(matrix_to_csv(matrix), args.out)
    else:
        _emit(matrix_to_json(matrix) + "\n", args.out)
    return 0


def _cmd_det(args) -> int:
    ns = _resolve_nodes(args)
    if args.method == "closed":
        value = _CLOSED_FORMS[args.kind](ns)
    else:
        matrix = _build_matrix(args.kind, ns, parse_rational(args.at))
        value = det_laplace(matrix) if args.method == "laplace" else det_bareiss(matrix)
    sys.stdout.write(render_rational(value) + "\n")
    return 0


def _parse_n_range(text: str) -> tuple[int, int]:
    match = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", text)
    if not match:
        raise ValueError(f"bad n range {text!r}; expected LO..HI or a single size")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    return lo, hi


def _cmd_verify(args) -> int:
    lo, hi = _parse_n_range(args.n)
    cfg = VerifyConfig(n_lo=lo, n_hi=hi, coeff_bound=args.coeff_bound)
    names = "all" if args.suite == "all" else [s for s in args.suite.split(",") if s]
    reports = run_suite(names, args.trials, args.seed, cfg)
    for report in reports:
        sys.stdout.write(report.json_line() + "\n")
        sys.stderr.write(f"# {report.identity}: {report.elapsed_ms} ms\n")
    return 0 if all(r.failures == 0 for r in reports) else 1


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(piece) for piece in text.split(",") if piece]
    except ValueError:
        raise ValueError(f"bad {what} list {text!r}; expected comma-separated integers") from None


def _cmd_bench(args) -> int:
    n_values = _parse_int_list(args.n, "size")
    methods = [m for m in args.methods.split(",") if m]
    records = run_bench(n_values, methods, args.repeats, args.entry_bits, args.seed)
    _emit("".join(record.csv_row() + "\n" for record in records), args.out)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad arguments, 0 for --help
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except LaplaceSizeError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
