"""Command-line front end.

Exit codes: 0 success, 1 a selected check failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import catalog, checks, diamonds
from .exterior import BidegreeError, Form, convert_frame
from .hodge import DegenerateMetricError
from .scalars import PoleError
from .syntax import Func, ParseError, evaluate, format_value, parse

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _emit(out, payload: dict):
    out.write(json.dumps(payload, indent=2, sort_keys=False, ensure_ascii=False) + "\n")


def _topology(args) -> diamonds.TopologicalInput:
    return diamonds.TopologicalInput(args.b1, args.bplus, args.bminus)


def _numbers(args) -> diamonds.CohomologyNumbers:
    return diamonds.CohomologyNumbers(
        h11_bc=args.h11bc, h11_a=args.h11a, h12_bc=args.h12bc,
        h11=getattr(args, "h11", None), h12=getattr(args, "h12", None),
    )


def _topology_inputs(args) -> dict:
    return {"b1": args.b1, "bplus": args.bplus, "bminus": args.bminus}


# ---------------------------------------------------------------------------
# verify

def cmd_verify(args, out) -> int:
    if args.all:
        names = checks.check_names()
    elif args.check:
        names = []
        for n in args.check:
            try:
                names.append(checks._lookup(n).name)
            except checks.UnknownCheckError as exc:
                raise UsageError(exc.args[0]) from None
    else:
        raise UsageError("verify needs --check NAME or --all")
    results = [checks.run_check(n) for n in names]
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        _emit(out, {
            "command": "verify",
            "inputs": {"checks": names},
            "results": [
                {
                    "name": r.name,
                    "title": r.title,
                    "paper": r.paper_location,
                    "status": r.status,
                    "witness": r.witness_text(),
                    "details": r.details,
                }
                for r in results
            ],
        })
    else:
        for r in results:
            out.write(f"{r.name:<4} {r.title:<28} {r.status.upper():<5} {r.runtime_ms:8.1f} ms  [{r.paper_location}]\n")
            if args.verbose or not r.passed or len(results) == 1:
                for line in r.details:
                    out.write(f"       {line}\n")
            if not r.passed:
                out.write("       witness: " + r.witness_text().replace("\n", "\n                ") + "\n")
        out.write(f"{len(results) - len(failed)}/{len(results)} checks passed\n")
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------------------
# diamonds and decisions

def cmd_diamond(args, out) -> int:
    t = _topology(args)
    d = diamonds.diamond(t, args.kind, _numbers(args))
    if args.format == "json":
        payload = {"command": "diamond", "inputs": dict(_topology_inputs(args), kind=args.kind)}
        payload.update(d.to_json())
        _emit(out, payload)
    else:
        out.write(f"{d.kind} diamond for b1={t.b1}, b+={t.b_plus}, b-={t.b_minus}\n")
        out.write(d.render() + "\n")
        unknown = d.unknowns()
        if unknown:
            out.write("unknowns: " + ", ".join(unknown) + "\n")
        for w in d.warnings:
            out.write(f"warning: {w}\n")
    return EXIT_OK


def cmd_ddbar(args, out) -> int:
    t = _topology(args)
    try:
        v = diamonds.ddbar_decision(t, _numbers(args), args.mode)
    except diamonds.MissingNumberError as exc:
        flag = {"h11_bc": "--h11bc", "h11_a": "--h11a", "h12_bc": "--h12bc"}.get(exc.name, exc.name)
        raise UsageError(f"missing required number {flag} ({exc})") from None
    summary = v.summary()
    if args.format == "json":
        _emit(out, {
            "command": "ddbar",
            "inputs": dict(_topology_inputs(args), h11bc=args.h11bc, h11a=args.h11a, h12bc=args.h12bc, mode=args.mode),
            "results": [{
                "verdict": v.holds,
                "summary": summary,
                "conditions": [{"condition": c, "holds": ok} for c, ok in v.conditions],
                "deltas": {str(k): val for k, val in sorted(v.deltas.items())},
                "flags": v.flags,
                "betti": v.betti_profile,
                "bott_chern": v.bc_diamond.to_json() if v.bc_diamond else None,
            }],
        })
    else:
        out.write(summary + "\n")
        for c, ok in v.conditions:
            out.write(f"  [{'x' if ok else ' '}] {c}\n")
        for k, val in sorted(v.deltas.items()):
            out.write(f"  Delta^{k} = {val}\n")
        for f in v.flags:
            out.write(f"  flag: {f}\n")
        if v.holds:
            out.write("  Betti numbers of Z: " + ", ".join(map(str, v.betti_profile)) + "\n")
            out.write("  Bott-Chern diamond:\n")
            for line in v.bc_diamond.render().splitlines():
                out.write("    " + line + "\n")
    return EXIT_OK


def cmd_frolicher(args, out) -> int:
    r = diamonds.frolicher_E1_check(_topology(args), regular=args.regular)
    if args.format == "json":
        _emit(out, {
            "command": "frolicher",
            "inputs": dict(_topology_inputs(args), regular=args.regular),
            "results": [{"consistent": r.consistent, "hodge_numbers": r.hodge_numbers, "trace": r.trace}],
        })
    else:
        out.write(r.summary() + "\n")
        for line in r.trace:
            out.write(f"  {line}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# expressions

def _caret(text: str, exc: ParseError) -> str:
    return f"{text}\n{' ' * exc.pos}^"


def cmd_eval(args, out) -> int:
    metric = None
    if args.metric == "paper":
        metric = catalog.paper_metric()
    try:
        e = parse(args.expr)
        if args.apply:
            if args.apply in ("star", "astar") and metric is None:
                raise UsageError(f"--apply {args.apply} needs --metric paper")
            e = Func(args.apply, e, 0)
        value = evaluate(e, metric)
    except ParseError as exc:
        raise UsageError(f"{exc}\n{_caret(args.expr, exc)}") from None
    except (BidegreeError, PoleError, DegenerateMetricError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None
    if isinstance(value, Form) and args.frame != "native":
        value = convert_frame(value, args.frame)
    text = format_value(value)
    if args.format == "json":
        result = {"value": text, "type": "form" if isinstance(value, Form) else "scalar"}
        if isinstance(value, Form):
            result["frame"] = value.frame.name
            if value.frame.types is not None:
                result["bidegrees"] = [list(b) for b in sorted(value.bidegrees())]
        _emit(out, {
            "command": "eval",
            "inputs": {"expr": args.expr, "apply": args.apply, "metric": args.metric, "frame": args.frame},
            "results": [result],
        })
    else:
        out.write(text + "\n")
    return EXIT_OK


def cmd_catalog(args, out) -> int:
    if args.name:
        try:
            entries = [catalog.lookup(args.name)]
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    else:
        entries = catalog.entries()
    if args.format == "json":
        _emit(out, {
            "command": "catalog",
            "inputs": {"name": args.name},
            "results": [
                {
                    "name": e.name,
                    "value": str(e.value),
                    "bidegree": list(e.bidegree),
                    "paper": e.paper_location,
                    "display": e.display,
                    "expected": {p: v for p, v in e.expected_properties},
                }
                for e in entries
            ],
        })
    else:
        for e in entries:
            out.write(f"{e.name:<16} ({e.bidegree[0]},{e.bidegree[1]})  {e.value}\n")
            if args.name:
                out.write(f"  display:  {e.display}\n  location: {e.paper_location}\n")
                for p, v in e.expected_properties:
                    out.write(f"  expects {p} = {v}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistorcheck",
        description="Exact exterior calculus and cohomology arithmetic for twistor spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    def topo(p):
        p.add_argument("--b1", type=_nonneg, required=True)
        p.add_argument("--bplus", type=_nonneg, required=True)
        p.add_argument("--bminus", type=_nonneg, required=True)

    def numbers(p):
        p.add_argument("--h11bc", type=_nonneg)
        p.add_argument("--h11a", type=_nonneg)
        p.add_argument("--h12bc", type=_nonneg)

    p = sub.add_parser("verify", help="run named verification checks")
    p.add_argument("--check", action="append", metavar="NAME", help="check name such as C1 (repeatable)")
    p.add_argument("--all", action="store_true", help="run every registered check")
    p.add_argument("-v", "--verbose", action="store_true", help="list every sub-claim")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("diamond", help="Betti vector or Hodge / Bott-Chern / Aeppli diamond of Z")
    p.add_argument("--kind", choices=("hodge", "bc", "aeppli", "betti"), required=True)
    topo(p)
    numbers(p)
    p.add_argument("--h11", type=_nonneg, help="Dolbeault h^{1,1} for the Hodge diamond")
    p.add_argument("--h12", type=_nonneg, help="Dolbeault h^{1,2} for the Hodge diamond")
    fmt(p)
    p.set_defaults(func=cmd_diamond)

    p = sub.add_parser("ddbar", help="decide the del-delbar-lemma from cohomology numbers")
    topo(p)
    numbers(p)
    p.add_argument("--mode", choices=("A", "B"), default="A")
    fmt(p)
    p.set_defaults(func=cmd_ddbar)

    p = sub.add_parser("eval", help="evaluate a scalar or form expression")
    p.add_argument("expr")
    p.add_argument("--apply", choices=("d", "del", "delbar", "star", "astar", "conj"))
    p.add_argument("--metric", choices=("paper",))
    p.add_argument("--frame", choices=("sigma", "dz", "native"), default="sigma")
    fmt(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("frolicher", help="test E1 degeneration of the Frolicher spectral sequence")
    topo(p)
    p.add_argument("--regular", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_frolicher)

    p = sub.add_parser("catalog", help="list the named forms")
    p.add_argument("--name")
    fmt(p)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"twistorcheck {args.command}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
