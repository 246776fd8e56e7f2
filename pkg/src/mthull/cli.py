"""Command line interface.

Every subcommand reads a code description file (see mtcode.parse_spec for
the format) and prints either plain text or JSON.  Exit codes: 0 success,
2 unreadable input, 3 invalid code description, 4 shift constants
incompatible with kappa (pass --allow-override where supported), 5
enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    AssumptionViolated,
    BudgetExceeded,
    MthullError,
    SpecParseError,
    ZeroCodeError,
)
from .galois import assumption_holds, dual_gpm, dual_shift_constants
from .hull import classify, hull_gpm
from .mtcode import CodeSpec, parse_spec
from .oracle import (
    available_backends,
    expanded_matrix,
    hongwei_rank,
    hull_by_definition,
    min_distance,
)
from .polymat import format_matrix
from .polyring import format_element, format_poly

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_ASSUMPTION = 4
EXIT_BUDGET = 5


def _load_spec(path: str) -> CodeSpec:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecParseError(str(exc)) from exc
    return parse_spec(text)


def _matrix_payload(mat):
    return [[format_poly(e) for e in row] for row in mat.rows]


def _emit(args, text_lines, payload):
    if args.format == "structured":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_reduce(args):
    spec = _load_spec(args.spec)
    reduced = spec.reduced()
    _emit(
        args,
        [format_matrix(reduced.gpm)],
        {"gpm": _matrix_payload(reduced.gpm), "dim": reduced.dimension},
    )
    return EXIT_OK


def _cmd_identical(args):
    spec = _load_spec(args.spec)
    _emit(
        args,
        [format_matrix(spec.identical)],
        {"identical": _matrix_payload(spec.identical), "dim": spec.dimension},
    )
    return EXIT_OK


def _check_kappa(spec, kappa):
    if not 0 <= kappa < spec.field.e:
        raise ValueError(f"kappa must be in [0, {spec.field.e})")


def _cmd_dual(args):
    spec = _load_spec(args.spec)
    _check_kappa(spec, args.kappa)
    h = dual_gpm(spec, 0)
    h_kappa = h if args.kappa == 0 else dual_gpm(spec, args.kappa)
    deltas = [format_element(d) for d in dual_shift_constants(spec, args.kappa)]
    _emit(
        args,
        [
            "H (Euclidean) = [",
            format_matrix(h),
            "]",
            f"H_{args.kappa} = [",
            format_matrix(h_kappa),
            "]",
        ],
        {
            "dual_gpm_euclidean": _matrix_payload(h),
            "dual_gpm": _matrix_payload(h_kappa),
            "dual_lambdas": deltas,
            "dim_dual": spec.length - spec.dimension,
        },
    )
    return EXIT_OK


def _cmd_hull(args):
    spec = _load_spec(args.spec)
    _check_kappa(spec, args.kappa)
    gpm = hull_gpm(spec, args.kappa)
    report = classify(spec, args.kappa)
    _emit(
        args,
        [
            f"dim(hull) = {report.dim_hull}",
            format_matrix(gpm),
        ],
        {"hull_gpm": _matrix_payload(gpm), "dim_hull": report.dim_hull},
    )
    return EXIT_OK


def _cmd_classify(args):
    spec = _load_spec(args.spec)
    _check_kappa(spec, args.kappa)
    report = classify(spec, args.kappa, allow_override=args.allow_override)
    _emit(args, [report.classification, report.as_text()], report.as_dict())
    return EXIT_OK


def _cmd_expand(args):
    spec = _load_spec(args.spec)
    dense = expanded_matrix(spec)
    rows = [
        " ".join(format_element(a) for a in row) for row in dense.to_rows()
    ]
    _emit(
        args,
        rows,
        {
            "rows": [
                [format_element(a) for a in row] for row in dense.to_rows()
            ],
            "rank": dense.rank(),
        },
    )
    return EXIT_OK


def _cmd_mindist(args):
    spec = _load_spec(args.spec)
    d = min_distance(spec, budget=args.budget, backend=args.backend)
    _emit(args, [f"d_min = {d}"], {"d_min": d})
    return EXIT_OK


def _cmd_oracle_check(args):
    from .galois import galois_inner
    from .oracle import rowspace_equal

    spec = _load_spec(args.spec)
    _check_kappa(spec, args.kappa)
    dense = expanded_matrix(spec)
    dim_code = dense.rank()
    via_gram = dim_code - hongwei_rank(dense, args.kappa)
    hull_dense = hull_by_definition(dense, args.kappa)
    via_def = hull_dense.nrows

    checks = {}
    checks["dimension agreement (gram vs definition)"] = via_gram == via_def
    checks["dimension agreement (dense vs polynomial)"] = dim_code == spec.dimension

    if assumption_holds(spec, args.kappa):
        report = classify(spec, args.kappa)
        checks["dimension agreement (pipeline vs gram)"] = (
            report.dim_hull == via_gram
        )
        if report.dim_hull > 0:
            hull_spec = CodeSpec(
                spec.field, spec.blocks, spec.lambdas, report.hull
            )
            hull_expanded = expanded_matrix(hull_spec)
            checks["hull row-space equality"] = rowspace_equal(
                hull_expanded, hull_dense
            ) if via_def > 0 else False
        else:
            checks["hull row-space equality"] = via_def == 0

    ortho = True
    if via_def > 0:
        for hrow in hull_dense.to_rows():
            for crow in dense.to_rows():
                if galois_inner(crow, hrow, args.kappa):
                    ortho = False
                    break
            if not ortho:
                break
    checks["hull orthogonality to the code"] = ortho

    ok = all(checks.values())
    lines = [
        f"dim(code) = {dim_code}",
        f"dim(hull) via gram rank = {via_gram}",
        f"dim(hull) via definition = {via_def}",
    ]
    lines += [
        f"{'pass' if good else 'FAIL'}: {name}" for name, good in checks.items()
    ]
    payload = {
        "dim_code": dim_code,
        "dim_hull_gram": via_gram,
        "dim_hull_definition": via_def,
        "checks": {name: bool(good) for name, good in checks.items()},
        "consistent": bool(ok),
    }
    _emit(args, lines, payload)
    return EXIT_OK if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mthull",
        description=(
            "Exact computations on multi-twisted codes: reduced generator "
            "matrices, Galois duals, hulls, and minimum distance."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, helptext, kappa=False, override=False, budget=False):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("spec", help="path to a code description file")
        p.add_argument(
            "--format",
            choices=("text", "structured"),
            default="text",
            help="output format (structured prints one JSON object)",
        )
        if kappa:
            p.add_argument(
                "--kappa", type=int, default=0, help="Galois parameter (default 0)"
            )
        if override:
            p.add_argument(
                "--allow-override",
                action="store_true",
                help="classify with the dense oracle even when the shift "
                "constants are incompatible with kappa",
            )
        if budget:
            p.add_argument(
                "--budget",
                type=int,
                default=1 << 26,
                help="max number of codewords to enumerate",
            )
            p.add_argument(
                "--backend",
                choices=available_backends(),
                default=None,
                help="enumeration kernel (default: compiled when available)",
            )
        p.set_defaults(fn=fn)
        return p

    add("reduce", _cmd_reduce, "print the reduced generator matrix")
    add("identical", _cmd_identical, "print the companion matrix A with A G = diag")
    add("dual", _cmd_dual, "print a generator matrix of the Galois dual", kappa=True)
    add("hull", _cmd_hull, "print the hull dimension and generator matrix", kappa=True)
    add(
        "classify",
        _cmd_classify,
        "self-orthogonal / LCD / intermediate classification",
        kappa=True,
        override=True,
    )
    add("expand", _cmd_expand, "print a dense spanning matrix of the code")
    add("mindist", _cmd_mindist, "exhaustive minimum Hamming distance", budget=True)
    add(
        "oracle-check",
        _cmd_oracle_check,
        "cross-check hull dimensions with dense arithmetic",
        kappa=True,
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except AssumptionViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ASSUMPTION
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ZeroCodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (MthullError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
