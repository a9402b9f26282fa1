"""Command-line front end.

Every command reads a matrix document from a path (or ``-`` for stdin),
writes one JSON result document to stdout and diagnostics to stderr.

Exit codes: 0 success/verified, 1 verification failed, 2 input error,
3 no closed form over Q (NOT_SPLIT / NOT_SQUARE_FREE).
"""

import argparse
import sys

from . import __version__
from .documents import DocumentError, digest, dumps, load_matrix_document, matrix_to_json, sequence_to_json
from .inverses import (
    UInverseSpec,
    complete_from_drazin,
    default_n,
    drazin_euclid,
    drazin_formula,
    index,
    u_inverse_check,
)
from .selftest import DEFAULT_COUNT, DEFAULT_SEED, run_selftest
from .sequences import EligibilityError, complete_seq, drazin_seq, pcf

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_INELIGIBLE = 3


class InputError(Exception):
    pass


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _load(path):
    try:
        return load_matrix_document(_read(path))
    except DocumentError as exc:
        raise InputError(f"{path}: {exc}") from None


def _result(command, matrix, outputs, status="ok", **extra):
    doc = {"command": command, "input_sha256": digest(matrix)}
    doc.update(extra)
    doc["outputs"] = outputs
    doc["status"] = status
    return doc


def _emit(doc):
    sys.stdout.write(dumps(doc))


def _ineligible(command, matrix, exc, **extra):
    print(f"error: {exc.code}: {exc}", file=sys.stderr)
    _emit(_result(command, matrix, {"error": exc.code, "factor": str(exc.factor),
                                    "factor_coeffs": exc.factor.to_strings()},
                  status="ineligible", **extra))
    return EXIT_INELIGIBLE


def cmd_index(args):
    a, label = _load(args.input)
    _emit(_result("index", a, {"index": index(a)}, label=label))
    return EXIT_OK


def _sequence_route(a, kind):
    seq = drazin_seq(a) if kind == "drazin" else complete_seq(a)
    return seq(1)


def _algebraic_route(a, kind, route):
    ad = drazin_formula(a) if route == "formula" else drazin_euclid(a)
    return ad if kind == "drazin" else complete_from_drazin(a, ad)


def cmd_inverse(args):
    a, label = _load(args.input)
    echo = {"kind": args.kind, "route": args.route, "label": label}
    if args.route != "all":
        try:
            if args.route == "sequence":
                m = _sequence_route(a, args.kind)
            else:
                m = _algebraic_route(a, args.kind, args.route)
        except EligibilityError as exc:
            return _ineligible("inverse", a, exc, **echo)
        _emit(_result("inverse", a, {args.route: matrix_to_json(m)}, **echo))
        return EXIT_OK

    results = {r: _algebraic_route(a, args.kind, r) for r in ("formula", "euclid")}
    outputs = {}
    try:
        results["sequence"] = _sequence_route(a, args.kind)
    except EligibilityError as exc:
        print(f"note: sequence route skipped: {exc.code}: {exc}", file=sys.stderr)
        outputs["sequence_skipped"] = {"error": exc.code, "factor": str(exc.factor)}
    for r, m in results.items():
        outputs[r] = matrix_to_json(m)
    values = list(results.values())
    agreement = all(m == values[0] for m in values)
    outputs["agreement"] = agreement
    _emit(_result("inverse", a, outputs, status="ok" if agreement else "failed", **echo))
    return EXIT_OK if agreement else EXIT_FAILED


def cmd_pcf(args):
    a, label = _load(args.input)
    try:
        seq = pcf(a)
    except EligibilityError as exc:
        return _ineligible("pcf", a, exc, label=label)
    outputs = {"sequence": sequence_to_json(seq)}
    if args.at:
        outputs["evaluations"] = [{"k": k, "matrix": matrix_to_json(seq(k))} for k in args.at]
    _emit(_result("pcf", a, outputs, label=label))
    return EXIT_OK


def cmd_verify(args):
    a, label = _load(args.input)
    x, _ = _load(args.candidate)
    if a.dim != x.dim:
        raise InputError(f"dimension mismatch: matrix is {a.dim}x{a.dim}, candidate is {x.dim}x{x.dim}")
    n = args.n if args.n is not None else default_n(index(a))
    try:
        spec = UInverseSpec.parse(args.equations, n)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report = u_inverse_check(a, x, spec)
    outputs = {"equations": report.as_labels(), "verdict": report.verdict}
    _emit(_result("verify", a, outputs, status="ok" if report.verdict else "failed",
                  candidate_sha256=digest(x), n=n, label=label))
    return EXIT_OK if report.verdict else EXIT_FAILED


def cmd_selftest(args):
    summary = run_selftest(args.count, args.seed, args.golden, args.workers)
    golden = summary["golden"]
    props = summary["properties"]
    for name, ok in golden.items():
        print(f"[{'PASS' if ok else 'FAIL'}] golden {name}", file=sys.stderr)
    print(f"properties: {props['matrices']} matrices (seed {props['seed']}), "
          f"{props['eligible_for_sequence_route']} eligible for the sequence route, "
          f"{len(props['failures'])} failing", file=sys.stderr)
    doc = {"command": "selftest", "outputs": summary, "status": "ok" if summary["passed"] else "failed"}
    _emit(doc)
    return EXIT_OK if summary["passed"] else EXIT_FAILED


def _nonneg_int_list(text):
    try:
        ks = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if any(k < 0 for k in ks):
        raise argparse.ArgumentTypeError("evaluation points must be nonnegative")
    return ks


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser():
    parser = argparse.ArgumentParser(
        prog="drazinkit",
        description="Exact Drazin and complete inverses of rational matrices.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="index of a matrix")
    p.add_argument("input", nargs="?", default="-", help="matrix document (default: stdin)")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("inverse", help="Drazin or complete inverse by one or all routes")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--kind", choices=("drazin", "complete"), default="complete")
    p.add_argument("--route", choices=("formula", "euclid", "sequence", "all"), default="formula")
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("pcf", help="closed form of the power sequence (A^k)")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--at", type=_nonneg_int_list, default=[], action="extend",
                   help="comma-separated k values at which to evaluate the closed form")
    p.set_defaults(func=cmd_pcf)

    p = sub.add_parser("verify", help="check which inverse equations a candidate satisfies")
    p.add_argument("input", help="matrix document for A")
    p.add_argument("candidate", help="matrix document for the candidate X")
    p.add_argument("--equations", default="1,4,5", help="subset of 1,3,4,5 (default 1,4,5)")
    p.add_argument("--n", type=_positive_int, default=None,
                   help="exponent in equation 1 (default: index of A, at least 1)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="golden example plus fixed-seed property suite")
    p.add_argument("--count", type=_positive_int, default=DEFAULT_COUNT)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--golden", default=None, help="alternate golden data file")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
