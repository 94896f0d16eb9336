"""Command-line front door.

Subcommands: outcome, reduce, best-move, equiv, verify, serve.  Positions on
the command line use the same grammar as parse_position everywhere.
"""

from __future__ import annotations

import argparse
import sys

from . import algebra, verify
from .core import ParseError, Player, parse_position
from .oracle import Oracle, DEFAULT_BOUND
from .strategy import best_move


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format", choices=["text", "structured"], default="text",
        help="structured prints stable key=value lines",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partizan-kayles")
    parser.add_argument(
        "--oracle-bound", type=int, default=DEFAULT_BOUND,
        help="max total pins for exhaustive search",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("outcome", help="misère outcome of a position")
    p.add_argument("position")
    _add_format(p)

    p = sub.add_parser("reduce", help="square/domino reduction and monoid value")
    p.add_argument("position")
    _add_format(p)

    p = sub.add_parser("best-move", help="winning move advice")
    p.add_argument("position")
    p.add_argument("player", choices=["L", "R"])
    _add_format(p)

    p = sub.add_parser("equiv", help="bounded indistinguishability test")
    p.add_argument("position_a")
    p.add_argument("position_b")
    p.add_argument("--bound", type=int, default=8)
    _add_format(p)

    p = sub.add_parser("verify", help="re-verify the solved theory")
    p.add_argument("--suite", nargs="+", default=["all"], metavar="CLAIM")
    p.add_argument("--max-pins", type=int, default=18)
    p.add_argument("--x-bound", type=int, default=15)
    _add_format(p)

    p = sub.add_parser("serve", help="run the game HTTP API")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--snapshot", default=None, help="JSON session snapshot path")

    return parser


def _cmd_outcome(args, oracle: Oracle) -> int:
    pos = parse_position(args.position)
    fast = algebra.fast_outcome(pos)
    checked = pos.total_pins <= oracle.bound
    if checked:
        slow = oracle.misere_outcome(pos)
        if slow != fast:
            print(
                f"DISAGREEMENT: formula {fast.value} vs oracle {slow.value}",
                file=sys.stderr,
            )
            return 2
    if args.format == "structured":
        print(f"position={pos}")
        print(f"outcome={fast.value}")
        print(f"oracle-checked={'yes' if checked else 'no'}")
    else:
        note = "" if checked else " (formula only; beyond oracle bound)"
        print(f"{fast.value}{note}")
    return 0


def _cmd_reduce(args, oracle: Oracle) -> int:
    pos = parse_position(args.position)
    rf = algebra.reduce_position(pos)
    v = algebra.monoid_value(pos)
    if args.format == "structured":
        print(f"position={pos}")
        print(f"s1={rf.k1}")
        print(f"s2={rf.k2}")
        print(f"value={v}")
        return 0
    terms = []
    if rf.k1:
        terms.append(f"{rf.k1}×S1")
    if rf.k2:
        terms.append(f"{rf.k2}×S2")
    body = " + ".join(terms) if terms else "0"
    print(f"{body} (value {v})")
    return 0


def _cmd_best_move(args, oracle: Oracle) -> int:
    pos = parse_position(args.position)
    who = Player(args.player)
    advice = best_move(pos, who)
    if args.format == "structured":
        print(f"position={pos}")
        print(f"player={who.value}")
        if advice.immediate_win:
            print("advice=immediate-win")
        else:
            kind = "winning" if advice.winning else "losing"
            print(f"advice={kind}")
            strip = pos.components[advice.move.component_index]
            print(f"strip={strip}")
            print(f"offset={advice.move.offset}")
            print(f"result={advice.result}")
            print(f"result-outcome={advice.result_outcome.value}")
        return 0
    if advice.immediate_win:
        print("no legal move — immediate win")
        return 0
    strip = pos.components[advice.move.component_index]
    piece = "square" if who is Player.LEFT else "domino"
    line = (
        f"play {piece} at offset {advice.move.offset} of strip {strip}"
        f" → {advice.result} ({advice.result_outcome.value})"
    )
    if not advice.winning:
        print(f"no winning move ({advice.position_outcome.value}); least-bad: {line}")
    else:
        print(line)
    return 0


def _cmd_equiv(args, oracle: Oracle) -> int:
    a = parse_position(args.position_a)
    b = parse_position(args.position_b)
    needed = max(a.total_pins, b.total_pins) + args.bound
    if needed > oracle.bound:
        oracle = Oracle(needed)
    verdict = algebra.indistinguishable_bounded(a, b, args.bound, oracle)
    if args.format == "structured":
        print(verdict.to_record())
    elif verdict.distinguished:
        oa, ob = verdict.outcomes
        print(f"distinguished by X={verdict.witness}: {oa.value} vs {ob.value}")
    else:
        print(f"indistinguishable up to bound {args.bound}")
    return 0


def _cmd_verify(args, oracle: Oracle) -> int:
    try:
        reports = verify.run_suite(args.suite, args.max_pins, args.x_bound)
    except verify.UnknownClaimError as e:
        print(str(e), file=sys.stderr)
        return 2
    for r in reports:
        print(r.to_json() if args.format == "structured" else r.to_line())
    return 0 if all(r.status == "confirmed" for r in reports) else 1


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(snapshot_path=args.snapshot)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        return _cmd_serve(args)
    oracle = Oracle(args.oracle_bound)
    handler = {
        "outcome": _cmd_outcome,
        "reduce": _cmd_reduce,
        "best-move": _cmd_best_move,
        "equiv": _cmd_equiv,
        "verify": _cmd_verify,
    }[args.command]
    try:
        return handler(args, oracle)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
