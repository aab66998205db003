"""Command-line front door.

Each subcommand is a thin wrapper over exactly one library call; `serve`
boots the HTTP service.  Text output is one result per line so it greps
cleanly; --format json emits the same JSON shapes the service uses.

Exit codes: 0 success (verify: no mismatches), 1 error, 2 verify found
mismatches.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .core import FloorSlope, Position, in_valid_region, moves
from .errors import ChocbarError
from .solver import SolveCache, classify, engine_move, grundy, winning_moves
from .theory import ConjectureFamily, s_relation
from .verify import RegionPolicy, SweepSpec, export_report, sweep


class _Parser(argparse.ArgumentParser):
    # Flag mistakes must exit 1; argparse defaults to 2, which verify
    # reserves for "mismatches found".
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _move_text(move) -> str:
    return f"{move.axis.value} {move.target} -> {move.result}"


def _parse_pos(text: str) -> Position:
    return Position.parse(text)


def _cmd_grundy(args) -> int:
    f = FloorSlope(args.k)
    value = grundy(f, _parse_pos(args.pos), SolveCache(), args.budget)
    if args.format == "json":
        print(json.dumps({"position": _parse_pos(args.pos).as_dict(), "grundy": value}))
    else:
        print(value)
    return 0


def _cmd_classify(args) -> int:
    f = FloorSlope(args.k)
    pos = _parse_pos(args.pos)
    cache = SolveCache()
    outcome = classify(f, pos, cache, args.budget)
    wins = winning_moves(f, pos, cache, args.budget)
    region = in_valid_region(f, pos)
    g = grundy(f, pos, cache, args.budget) if args.grundy else None
    if args.format == "json":
        payload = {
            "position": pos.as_dict(),
            "class": outcome.value,
            "in_valid_region": region,
            "winning_move_count": len(wins),
            "winning_moves": [m.as_dict() for m in wins],
        }
        if g is not None:
            payload["grundy"] = g
        print(json.dumps(payload))
        return 0
    print(outcome.value)
    if g is not None:
        print(f"grundy {g}")
    if not region:
        print("warning: position is outside the region y <= f(x,z); closed-form rules do not apply", file=sys.stderr)
    return 0


def _cmd_moves(args) -> int:
    f = FloorSlope(args.k)
    pos = _parse_pos(args.pos)
    legal = moves(f, pos)
    if args.format == "json":
        print(json.dumps({"position": pos.as_dict(), "moves": [m.as_dict() for m in legal]}))
    else:
        for move in legal:
            print(_move_text(move))
    return 0


def _cmd_best_move(args) -> int:
    f = FloorSlope(args.k)
    pos = _parse_pos(args.pos)
    move = engine_move(f, pos, SolveCache(), args.budget)
    if args.format == "json":
        print(json.dumps({"position": pos.as_dict(), "move": move.as_dict()}))
    else:
        print(_move_text(move))
    return 0


def _cmd_s_relation(args) -> int:
    pos = _parse_pos(args.pos)
    rel = s_relation(args.k, pos)
    if args.format == "json":
        print(json.dumps({"position": pos.as_dict(), "relation": rel.band.value, "s_n": rel.s_n}))
    else:
        print(f"{rel.band.value} s_n={rel.s_n}")
    return 0


def _family_for(args) -> ConjectureFamily:
    if args.statement == "theorem":
        return ConjectureFamily.theorem(args.k)
    if args.statement == "conj-4m1":
        return ConjectureFamily.conj_4m1(args.k)
    return ConjectureFamily.conj_even(args.a, args.m)


def _cmd_verify(args) -> int:
    family = _family_for(args)
    x_max = args.max_x if args.max_x is not None else family.bound
    z_max = args.max_z if args.max_z is not None else family.bound
    if x_max is None or z_max is None:
        print("error: --max-x and --max-z are required for this family", file=sys.stderr)
        return 1
    spec = SweepSpec(
        family=family,
        x_max=x_max,
        z_max=z_max,
        region=RegionPolicy(args.region),
        allow_beyond_bound=getattr(args, "beyond_bound", False),
    )
    report = sweep(spec, workers=args.workers, budget=args.budget)
    if args.format in ("json", "csv"):
        sys.stdout.write(export_report(report, args.format).decode())
    else:
        print(f"family {family.name} k={family.params.k}")
        print(f"positions_checked {report.positions_checked}")
        print(f"mismatches {len(report.mismatches)}")
        for mm in report.mismatches:
            print(f"mismatch {mm.position} predicted={mm.predicted.value} oracle={mm.oracle.value}")
    return 2 if report.mismatches else 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(static_dir=args.static_dir, budget=args.budget, session_ttl=args.session_ttl)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _add_analysis_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k", type=int, required=True, help="slope divisor k")
    parser.add_argument("--pos", type=str, required=True, help="position as x,y,z")
    parser.add_argument("--budget", type=int, default=None, help="solver state budget override")
    parser.add_argument("--format", choices=["text", "json"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chocbar", description="3D chocolate-bar game engine and verifier")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("grundy", parents=[], help="Grundy number of a position")
    _add_analysis_flags(p)
    p.set_defaults(func=_cmd_grundy)

    p = sub.add_parser("classify", help="P/N classification of a position")
    _add_analysis_flags(p)
    p.add_argument("--grundy", action="store_true", help="also print the Grundy number")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("moves", help="list legal cuts from a position")
    _add_analysis_flags(p)
    p.set_defaults(func=_cmd_moves)

    p = sub.add_parser("best-move", help="engine's cut from a position")
    _add_analysis_flags(p)
    p.set_defaults(func=_cmd_best_move)

    p = sub.add_parser("s-relation", help="band of the signed partial sum S_n")
    _add_analysis_flags(p)
    p.set_defaults(func=_cmd_s_relation)

    p = sub.add_parser("verify", help="sweep a closed-form rule against the oracle")
    vsub = p.add_subparsers(dest="statement", required=True)
    for statement, needs_k in (("theorem", True), ("conj-4m1", True), ("conj-even", False)):
        vp = vsub.add_parser(statement)
        if needs_k:
            vp.add_argument("--k", type=int, required=True)
        else:
            vp.add_argument("--a", type=int, required=True)
            vp.add_argument("--m", type=int, required=True)
            vp.add_argument("--beyond-bound", action="store_true", help="sweep past the rule's x,z bound")
        vp.add_argument("--max-x", type=int, default=None)
        vp.add_argument("--max-z", type=int, default=None)
        vp.add_argument(
            "--region",
            choices=[policy.value for policy in RegionPolicy],
            default=RegionPolicy.VALID_ONLY.value,
        )
        vp.add_argument("--workers", type=int, default=1)
        vp.add_argument("--budget", type=int, default=None)
        vp.add_argument("--format", choices=["text", "json", "csv"], default="text")
        vp.set_defaults(func=_cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP play service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static-dir", default=None, help="directory with the built web UI")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--session-ttl", type=float, default=3600.0)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ChocbarError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
