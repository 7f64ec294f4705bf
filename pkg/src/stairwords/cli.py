"""Command-line front end: ``stairwords <verb> ...``.

Exit status is 0 on success, 1 when a verification suite has failures, and 2
for usage or domain errors.  ``--json`` (before or after the verb) switches
every verb to JSON output; integers are written as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .errors import InvalidParams, StairwordsError
from .exactnum import RatFun
from .genfun import assembled_gf, classic_staircase_gf, closed_form_gf, reconstructed_gf, series_sample
from .kernel import build_combinatorial_system, build_kernel_system, kernel_gf, system_to_json
from .staircase import StaircaseParams, build_suffix_automaton, transfer_count
from .suites import SUITE_ALIASES, SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

GF_METHODS = ("reconstruct", "closed", "assembled", "classic", "knopfmacher", "kernel")


def _emit(data) -> None:
    print(json.dumps(data, indent=2))


def _params(args) -> StaircaseParams:
    return StaircaseParams(args.k, args.L)


def _gf(params: StaircaseParams, method: str) -> RatFun:
    if method in ("classic", "knopfmacher"):
        if params.L != 1:
            raise InvalidParams(f"the classic formula covers L = 1 only (got L={params.L})")
        return classic_staircase_gf(params.k)
    return {
        "reconstruct": reconstructed_gf,
        "closed": closed_form_gf,
        "assembled": assembled_gf,
        "kernel": kernel_gf,
    }[method](params)


def cmd_count(args) -> int:
    p = _params(args)
    c = transfer_count(p, args.n, args.mod)
    if args.json:
        _emit({"k": p.k, "L": p.L, "n": args.n, "modulus": None if args.mod is None else str(args.mod), "count": str(c)})
    else:
        print(c)
    return EXIT_OK


def cmd_series(args) -> int:
    p = _params(args)
    coeffs = [str(c) for c in series_sample(p, args.terms, args.method).coefficients]
    if args.json:
        _emit({"k": p.k, "L": p.L, "method": args.method, "coefficients": coeffs})
    else:
        print(json.dumps(coeffs))
    return EXIT_OK


def cmd_gf(args) -> int:
    p = _params(args)
    f = _gf(p, args.method)
    if args.json:
        _emit({"k": p.k, "L": p.L, "method": args.method, "gf": f.to_json(), "text": f.pretty()})
    else:
        print(f.pretty())
    return EXIT_OK


def cmd_states(args) -> int:
    tm = build_suffix_automaton(_params(args))
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(tm.to_dot())
    if args.json:
        _emit({"k": tm.params.k, "L": tm.params.L, "dim": tm.dim, "states": [list(s) for s in tm.states], "matrix": [list(r) for r in tm.matrix]})
    else:
        for s in tm.states:
            print(" ".join(map(str, s)))
    return EXIT_OK


def _parse_Ls(text: str) -> tuple[int, ...]:
    try:
        Ls = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")
    if any(L < 2 for L in Ls):
        raise argparse.ArgumentTypeError("the kernel suite needs every L >= 2")
    return Ls


def cmd_verify(args) -> int:
    report = run_suite(args.suite, Ls=args.L, forms=args.forms)
    if args.json:
        _emit(report.to_json())
    else:
        for case in report.cases:
            print(case.line())
        print(report.summary())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_kernel_dump(args) -> int:
    if args.k is None:
        system = build_kernel_system(args.L, 1, 1, 1, 1)
        data = system_to_json(system)
        data["rhs"] = "placeholders q = r = u = v = 1"
    else:
        p = StaircaseParams(args.k, args.L)
        data = system_to_json(build_combinatorial_system(p))
        data["k"] = p.k
    text = json.dumps(data, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")

    parser = argparse.ArgumentParser(prog="stairwords", description="Count staircase graph words and verify their generating functions.")
    parser.add_argument("--json", action="store_true", default=False, help="machine-readable output")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def with_params(sp):
        sp.add_argument("--k", type=int, required=True, help="alphabet size (>= 2)")
        sp.add_argument("--L", type=int, required=True, help="distance bound (>= 1)")
        return sp

    sp = with_params(sub.add_parser("count", parents=[common], help="number of valid words of one length"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--mod", type=int, default=None, help="reduce modulo this positive integer")
    sp.set_defaults(func=cmd_count)

    sp = with_params(sub.add_parser("series", parents=[common], help="counts for lengths 0 .. terms-1"))
    sp.add_argument("--terms", type=int, default=11)
    sp.add_argument("--method", choices=("brute", "transfer", "closed"), default="transfer")
    sp.set_defaults(func=cmd_series)

    sp = with_params(sub.add_parser("gf", parents=[common], help="generating function as 'num / den'"))
    sp.add_argument("--method", choices=GF_METHODS, default="closed")
    sp.set_defaults(func=cmd_gf)

    sp = with_params(sub.add_parser("states", parents=[common], help="suffix states of the automaton"))
    sp.add_argument("--dot", metavar="FILE", help="also write the automaton as a DOT digraph")
    sp.set_defaults(func=cmd_states)

    sp = sub.add_parser("verify", parents=[common], help="run a verification suite")
    sp.add_argument("--suite", choices=(*SUITES, *SUITE_ALIASES, "all"), default="all")
    sp.add_argument("--L", type=_parse_Ls, default=(2, 3), help="kernel suite: comma-separated L values (default 2,3)")
    sp.add_argument(
        "--forms",
        choices=("corrected", "printed"),
        default="corrected",
        help="kernel suite: check the component and sum formulas as usually printed, or with the repairs",
    )
    sp.set_defaults(func=cmd_verify)

    def dump_args(sp):
        sp.add_argument("--L", type=int, required=True, help="distance bound (>= 2)")
        sp.add_argument("--k", type=int, default=None, help="use the word-counting right-hand sides for this k")
        sp.add_argument("--out", metavar="FILE", help="write the JSON here instead of standard output")
        sp.set_defaults(func=cmd_kernel_dump)

    dump_args(sub.add_parser("kernel-dump", parents=[common], help="kernel system as JSON"))
    kernel = sub.add_parser("kernel", help="kernel system tools")
    ksub = kernel.add_subparsers(dest="kernel_verb", required=True, metavar="ACTION")
    dump_args(ksub.add_parser("dump", parents=[common], help="kernel system as JSON"))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (StairwordsError, ValueError) as exc:
        print(f"stairwords: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
