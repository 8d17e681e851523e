"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or a parse
error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
import warnings

from . import charcls, checks, hopf, kumod, multisym, s4calc
from .exactmath import injected_fault
from .expr import ParseError, evaluate_text, parse, symbols_used

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

GRAMMAR = """\
expression grammar (whitespace ignored):
  integers, u, x, y<n>, z(a,b), zeta(a,b), [n]
  + - * / ^<int>, and 'o' for the circle product (binds tighter than *)
examples:
  kucomm mul "y1*y1"
  kucomm circ "zeta(1,0) o zeta(0,1)"
  kucomm phi 2 "y2"
"""


class UsageError(Exception):
    pass


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(dump_json(payload))
    else:
        print(text)


def _parse_error(exc: ParseError):
    raise UsageError(f"parse error: {exc}") from None


def cmd_mul(args) -> int:
    try:
        ring = "f" if "x" in symbols_used(parse(args.expr)) else "ku"
        value = evaluate_text(args.expr, ring)
    except ParseError as exc:
        _parse_error(exc)
    payload = {"input": args.expr, "result": value.render()}
    if isinstance(value, kumod.KuElem):
        payload["terms"] = value.to_json()
    emit(args, value.render(), payload)
    return EXIT_OK


def cmd_circ(args) -> int:
    try:
        value = evaluate_text(args.expr, "hopf")
    except ParseError as exc:
        _parse_error(exc)
    emit(args, value.render(), {"input": args.expr, "result": value.render(), "terms": value.to_json()})
    return EXIT_OK


def cmd_hurewicz(args) -> int:
    text = args.expr if args.expr else f"y{args.n}"
    if args.n is None and not args.expr:
        raise UsageError("give an index n or --expr")
    try:
        value = evaluate_text(text, "ku")
        image = hopf.hurewicz(value)
    except ParseError as exc:
        _parse_error(exc)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    emit(args, image.render(), {"input": text, "result": image.render(), "terms": image.to_json()})
    return EXIT_OK


def cmd_split(args) -> int:
    try:
        value = charcls.splitting_pullback(args.k, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    emit(args, value.render(), {"k": args.k, "n": args.n, "result": value.render()})
    return EXIT_OK


def _table_text(report) -> str:
    lines = [f"{'class':<9}{'B_comU(2)':<28}{'B_comSU(2)':<16}status"]
    for r in report["rows"]:
        lines.append(f"{r['class']:<9}{r.get('u2', '?'):<28}{r.get('su2', '?'):<16}{r['status']}")
        if r["status"] != "ok":
            lines.append(f"{'':<9}table: {r.get('u2_expected', '?')} | {r.get('su2_expected', '?')}")
    return "\n".join(lines)


def cmd_u2table(args) -> int:
    report = charcls.verify_u2_table(consistent=not args.literal)
    emit(args, _table_text(report), report)
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_s4(args) -> int:
    report = s4calc.verify_kcoms4()
    lines = [f"{k}: {v}" for k, v in report["images"].items()]
    lines.append(f"basis determinant: {report['basis_determinant']}")
    lines.append(f"image of h: {report['h_image']}")
    emit(args, "\n".join(lines), report)
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_relations(args) -> int:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", multisym.StableRangeWarning)
        report = multisym.relation_report(args.n, args.d, allow_b0=args.allow_b0)
    lines = [f"rank {args.n}, degree {args.d}: kernel dimension {report['kernel_dimension']}"]
    lines += [f"  {r} = 0" for r in report["relations"]]
    emit(args, "\n".join(lines), report)
    return EXIT_OK


def cmd_phi(args) -> int:
    try:
        value = evaluate_text(args.expr, "ku")
    except ParseError as exc:
        _parse_error(exc)
    image = kumod.phi_k(args.k, value)
    emit(args, image.render(), {"k": args.k, "input": args.expr, "result": image.render(), "terms": image.to_json()})
    return EXIT_OK


def _verify_text(report, timings: bool) -> str:
    lines = []
    for c in report["checks"]:
        line = f"{c['status']:<8} {c['name']}"
        if timings:
            line += f"  ({c['seconds']:.3f}s)"
        if c["status"] != "ok":
            inputs = ", ".join(f"{k}={v}" for k, v in sorted(c["inputs"].items()))
            line += f"  [{inputs}] {c['lhs']} != {c['rhs']}"
            if c["detail"]:
                line += f"  ({c['detail']})"
        lines.append(line)
    counts = {s: sum(c["status"] == s for c in report["checks"]) for s in ("ok", "flagged", "fail")}
    lines.append(
        f"{len(report['checks'])} checks: {counts['ok']} ok, {counts['flagged']} flagged, {counts['fail']} failed"
    )
    if report["first_failure"]:
        lines.append(f"FAILED: {report['first_failure']}")
    lines.append(f"status: {report['status']}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    try:
        only = tuple(s for part in args.only for s in part.split(",") if s)
        cfg = checks.Config(
            max_weight=args.max_weight,
            fmt=args.format,
            only=only,
            seed=args.seed,
            trials=args.trials,
        )
        checks.select(cfg.only)
    except KeyError as exc:
        raise UsageError(f"unknown check {exc.args[0]!r}; known: {', '.join(sorted(checks.REGISTRY))}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fault = injected_fault() if args.inject_fault else contextlib.nullcontext()
    with fault:
        report = checks.run_checks(cfg)
    if not args.timings:
        for c in report["checks"]:
            c.pop("seconds", None)
    emit(args, _verify_text(report, args.timings), report)
    if report["first_failure"] and args.format == "json":
        print(f"FAILED: {report['first_failure']}", file=sys.stderr)
    return EXIT_OK if report["status"] == "ok" else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(
        prog="kucomm",
        description="Exact computations in ku_*(BU(1)), its Hopf ring and the "
        "cohomology of the commutative classifying spaces.",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("mul", parents=[common], help="evaluate a product in ku_*(BU(1)) or Z[u,x]/(x^2-ux)")
    s.add_argument("expr")
    s.set_defaults(func=cmd_mul)

    s = sub.add_parser("circ", parents=[common], help="evaluate an expression in the Hopf ring")
    s.add_argument("expr")
    s.set_defaults(func=cmd_circ)

    s = sub.add_parser("hurewicz", parents=[common], help="Hurewicz image of y_n or of an expression")
    s.add_argument("n", type=int, nargs="?")
    s.add_argument("--expr")
    s.set_defaults(func=cmd_hurewicz)

    s = sub.add_parser("split", parents=[common], help="pullback of z_n along the k-th splitting map")
    s.add_argument("k", type=int)
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_split)

    s = sub.add_parser("u2table", parents=[common], help="derive the U(2)/SU(2) comparison table")
    s.add_argument("--literal", action="store_true", help="use the pullback formulas' sign convention as is")
    s.set_defaults(func=cmd_u2table)

    s = sub.add_parser("s4", parents=[common], help="images of the S^4 classes in pi_4(B_comU)")
    s.set_defaults(func=cmd_s4)

    s = sub.add_parser("relations", parents=[common], help="relations among z-monomials at a rank and degree")
    s.add_argument("n", type=int)
    s.add_argument("d", type=int)
    s.add_argument("--allow-b0", action="store_true", help="also use generators z(a,0)")
    s.set_defaults(func=cmd_relations)

    s = sub.add_parser("phi", parents=[common], help="apply the operation phi^k")
    s.add_argument("k", type=int)
    s.add_argument("expr")
    s.set_defaults(func=cmd_phi)

    s = sub.add_parser("verify", parents=[common], help="run the oracle-versus-formula checks")
    s.add_argument("--max-weight", type=int, default=None)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--only", action="append", default=[], metavar="CHECK[,CHECK...]")
    s.add_argument("--timings", action="store_true", help="include wall time (breaks byte-identical reports)")
    s.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "max_weight", 0) is None:
            args.max_weight = checks.default_max_weight()
        return args.func(args)
    except UsageError as exc:
        print(f"kucomm: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"kucomm: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
