"""Command-line front end.

Every subcommand prints one JSON document on stdout.  Exit codes: 0 when an
answer was computed (including "no"), 1 when a self-test suite fails,
2 for invalid input, 3 for a violated precondition, 4 for a resource cap.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from .bb import BBCharacter, bb_finiteness, bb_sigma, sigma1_complement, wreath_sufficient
from .errors import BNSRError, ParseError
from .graph import DEFAULT_MAX_SIMPLICES, Graph, parse_graph
from .homology import DEFAULT_TIETZE_BUDGET
from .raag import RaagCharacter, Verdict, format_rational, parse_weights, raag_sigma
from . import selftest

log = logging.getLogger("bnsr")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(args) -> Graph:
    return parse_graph(_read(args.graph))


def _verdict_payload(v: Verdict) -> dict:
    out = {"verdict": v.value.value, "reason": v.reason}
    out["witness"] = v.witness.to_dict() if v.witness is not None else None
    if v.notes:
        out["notes"] = list(v.notes)
    return out


def cmd_fpn(args) -> dict:
    g = _load_graph(args)
    res = bb_finiteness(
        g, args.n, args.homotopical, max_simplices=args.max_simplices, tietze_budget=args.tietze_budget
    )
    return {
        "inputs": {"graph": g.to_document(), "n": args.n, "homotopical": args.homotopical},
        "property": f"{'F' if args.homotopical else 'FP'}_{args.n}",
        "verdict": res.value.value,
        "reason": res.reason,
    }


def cmd_raag(args) -> dict:
    g = _load_graph(args)
    mu = RaagCharacter(g, parse_weights(_read(args.char), g))
    v = raag_sigma(
        g, mu, args.n, args.homotopical, max_simplices=args.max_simplices, tietze_budget=args.tietze_budget
    )
    return {
        "inputs": {"graph": g.to_document(), "character": mu.to_document(), "n": args.n,
                   "homotopical": args.homotopical},
        **_verdict_payload(v),
    }


def cmd_bb(args) -> dict:
    g = _load_graph(args)
    chi = BBCharacter(g, parse_weights(_read(args.char), g))
    v = bb_sigma(
        g, chi, args.n, args.homotopical, max_simplices=args.max_simplices, tietze_budget=args.tietze_budget
    )
    return {
        "inputs": {"graph": g.to_document(), "character": chi.to_document(), "n": args.n,
                   "homotopical": args.homotopical},
        **_verdict_payload(v),
    }


def cmd_poly(args) -> dict:
    g = _load_graph(args)
    P = sigma1_complement(g)
    return {"inputs": {"graph": g.to_document()}, "polyhedron": P.to_document(),
            "whole_sphere": P.is_whole_sphere, "empty": P.is_empty}


def cmd_wreath(args) -> dict:
    certified = wreath_sufficient(args.n, args.support_count)
    out = {
        "inputs": {"n": args.n, "support_count": args.support_count},
        "certified": certified,
        "verdict": "yes" if certified else "unknown",
    }
    if not certified:
        out["note"] = "fewer than n+1 supporting coordinates: the criterion is inconclusive, not negative"
        if args.support_count == 0:
            out["note"] += "; empty support is the regime handled by the known result for T_chi empty"
    return out


def cmd_selftest(args) -> dict:
    results = selftest.run_all(quick=args.quick, seed=args.seed, inject_fault=args.inject_fault)
    return {
        "inputs": {"quick": args.quick, "seed": args.seed},
        "suites": [r.to_dict() for r in results],
        "passed": sum(r.passed for r in results),
        "failed": sum(not r.passed for r in results),
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bnsr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, char=False):
        p.add_argument("--graph", required=True, metavar="FILE")
        if char:
            p.add_argument("--char", required=True, metavar="FILE")
        p.add_argument("--max-simplices", type=int, default=DEFAULT_MAX_SIMPLICES)
        p.add_argument("--tietze-budget", type=int, default=DEFAULT_TIETZE_BUDGET)

    p = sub.add_parser("fpn", help="is BB_Gamma of type FP_n / F_n")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--homotopical", action="store_true")
    p.set_defaults(func=cmd_fpn)

    for name, func, help_ in (
        ("raag", cmd_raag, "membership in Sigma^n(A_Gamma)"),
        ("bb", cmd_bb, "membership in Sigma^n(BB_Gamma)"),
    ):
        p = sub.add_parser(name, help=help_)
        common(p, char=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--homotopical", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("poly", help="the complement of Sigma^1(BB_Gamma) as a polyhedron")
    common(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("wreath", help="wreath-product sufficiency test")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--support-count", type=int, required=True)
    p.set_defaults(func=cmd_wreath)

    p = sub.add_parser("selftest", help="run the consistency suites")
    p.add_argument("--quick", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_selftest)
    return parser


def _dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, default=_json_default)


def _json_default(obj):
    from fractions import Fraction

    if isinstance(obj, Fraction):
        return format_rational(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    logging.basicConfig(level=logging.INFO, format="%(name)s: %(message)s", stream=sys.stderr)
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        doc = {"command": args.command, **args.func(args)}
        code = 1 if args.command == "selftest" and doc["failed"] else 0
    except BNSRError as exc:
        doc = {"command": args.command, "error": {"type": type(exc).__name__, "message": str(exc)}}
        code = exc.exit_code
    # timing goes to stderr so stdout stays byte-identical across runs
    log.info("%s finished in %.1f ms", args.command, 1000 * (time.perf_counter() - start))
    print(_dump(doc), file=stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
