"""Command line front end.

Positions come either from a family spec string (kneser:5,2,0,
skeleton(s=3):complete:4, ...) or from a JSON complex file; see
`chomp nim --help` for the grammar.  Exit codes: 2 for unparsable
input, 3 when the position is past the engine's resource limits.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import closedforms, engine, families, verify
from .core import DEFAULT_FACE_CAP, Complex, load_complex
from .errors import ChompError, InvalidSpec, ResourceExceeded, TooLarge

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3


def _looks_like_file(spec: str) -> bool:
    return spec.endswith(".json") or os.path.sep in spec or os.path.isfile(spec)


def _load_position(spec: str, face_cap: int) -> tuple[Complex, object | None]:
    """(complex, parsed family spec or None for JSON files)."""
    if _looks_like_file(spec):
        try:
            cx = load_complex(spec)
        except FileNotFoundError:
            raise InvalidSpec(f"no such file: {spec}") from None
        except (json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
            raise InvalidSpec(f"bad complex file {spec}: {exc}") from None
        return cx, None
    fam = families.parse_family_spec(spec)
    return fam.build(face_cap), fam


def _spec_grammar_epilog() -> str:
    lines = ["family spec grammar:"]
    for pattern, desc in families.SPEC_GRAMMAR:
        lines.append(f"  {pattern:<28} {desc}")
    lines.append("or a path to a JSON file with "
                 '{"vertices": [...], "faces": [[...], ...]}')
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chomp",
        description="perfect play for chomp on graphs and clique complexes")
    sub = parser.add_subparsers(dest="command", required=True)

    nim = sub.add_parser(
        "nim", help="grundy value or outcome of a position",
        epilog=_spec_grammar_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter)
    nim.add_argument("spec", help="family spec string or JSON complex file")
    nim.add_argument("--method", choices=("auto", "formula", "engine"),
                     default="auto")
    nim.add_argument("--budget", type=int, default=None,
                     help="engine node budget")
    nim.add_argument("--face-cap", type=int, default=DEFAULT_FACE_CAP)

    best = sub.add_parser("best-move", help="a winning move, if one exists")
    best.add_argument("spec", help="family spec string or JSON complex file")
    best.add_argument("--budget", type=int, default=None)
    best.add_argument("--face-cap", type=int, default=DEFAULT_FACE_CAP)
    best.add_argument("--as-labels", action="store_true",
                      help="print vertex labels instead of ids")

    ver = sub.add_parser(
        "verify", help="replay closed forms against the engine")
    ver.add_argument("checks", nargs="*", default=None,
                     metavar="CHECK",
                     help=f"subset of: {', '.join(verify.CHECKS)}, all")
    ver.add_argument("--budget", type=int, default=None)
    ver.add_argument("--quiet", action="store_true",
                     help="print failures and summaries only")

    fuzz = sub.add_parser(
        "fuzz", help="randomized checks of the reduction and xor laws")
    fuzz.add_argument("--law", choices=("involution", "xor", "all"),
                      default="all")
    fuzz.add_argument("--trials", type=int, default=100)
    fuzz.add_argument("--seed", type=int, default=0)
    fuzz.add_argument("--budget", type=int, default=None)
    fuzz.add_argument("--quiet", action="store_true")

    serve = sub.add_parser("serve", help="run the play service over HTTP")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--snapshot", default=None,
                       help="JSONL file to append finished sessions to")
    serve.add_argument("--budget", type=int, default=None,
                       help="per-request engine node budget")
    return parser


def _print_formula(result: closedforms.ClosedFormResult) -> None:
    if result.nim is not None:
        print(f"Nim = {result.nim} ({result.provenance})")
    else:
        print(f"outcome = {result.outcome.value} ({result.provenance})")


def _cmd_nim(args) -> int:
    cx, fam = _load_position(args.spec, args.face_cap)
    if args.method == "formula":
        if fam is None:
            print("error: --method formula needs a family spec, "
                  "not a JSON file", file=sys.stderr)
            return EXIT_PARSE
        _print_formula(closedforms.closed_form_for_spec(
            fam, node_budget=args.budget))
        return EXIT_OK
    formula = None
    if args.method == "auto" and fam is not None:
        formula = closedforms.closed_form_for_spec(
            fam, node_budget=args.budget)
        if formula.nim is not None:
            _print_formula(formula)
            return EXIT_OK
    try:
        value, states = engine.grundy_with_stats(
            cx.state(), node_budget=args.budget)
    except ResourceExceeded as exc:
        if args.method == "auto" and formula is not None and formula.known:
            _print_formula(formula)
            return EXIT_OK
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    print(f"Nim = {value} (engine, {states} states expanded)")
    return EXIT_OK


def _cmd_best_move(args) -> int:
    cx, _ = _load_position(args.spec, args.face_cap)
    try:
        move = engine.best_move(cx.state(), node_budget=args.budget)
    except ResourceExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    if move is None:
        print("position is lost: every move loses against perfect play")
        return EXIT_OK
    if args.as_labels:
        text = " ".join(cx.vertex_labels[v] for v in move.face)
    else:
        text = " ".join(str(v) for v in move.face)
    print(f"best move: {text}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        reports = verify.run_checks(args.checks or None,
                                    node_budget=args.budget)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_PARSE
    bad = False
    for report in reports:
        print(report.format(show_ok=not args.quiet))
        print()
        bad = bad or not report.ok
    print("VERIFY:", "FAIL" if bad else "OK")
    return EXIT_FAIL if bad else EXIT_OK


def _cmd_fuzz(args) -> int:
    reports = []
    if args.law in ("involution", "all"):
        reports.append(verify.fuzz_involution_law(
            args.trials, args.seed, node_budget=args.budget))
    if args.law in ("xor", "all"):
        reports.append(verify.fuzz_xor_law(
            args.trials, args.seed, node_budget=args.budget))
    bad = False
    for report in reports:
        print(report.format(show_ok=not args.quiet))
        print()
        bad = bad or not report.ok
    print("FUZZ:", "FAIL" if bad else "OK")
    return EXIT_FAIL if bad else EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app
    app = create_app(snapshot_path=args.snapshot,
                     default_budget=args.budget)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "nim": _cmd_nim,
        "best-move": _cmd_best_move,
        "verify": _cmd_verify,
        "fuzz": _cmd_fuzz,
        "serve": _cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except (InvalidSpec,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (TooLarge, ResourceExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ChompError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
