"""Executable re-verification of the solved theory at desk scale.

Each claim is data: an id plus a checker that sweeps every in-bound instance
and reports confirmed/refuted with a re-checkable witness on failure.  The
emitted report doubles as the repository's map from theory to code.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable

from .algebra import (
    fast_outcome,
    fast_outcome_kj,
    geq_bounded,
    indistinguishable_bounded,
    monoid_value,
    outcome_from_value,
    outcome_geq,
    reduce_position,
)
from .core import Player, Position, moves
from .oracle import Oracle, Outcome, positions_up_to
from .strategy import best_move

S1 = Position((1,))
S2 = Position((2,))


class UnknownClaimError(ValueError):
    pass


@dataclass
class ClaimReport:
    claim_id: str
    params: dict
    status: str  # "confirmed" | "refuted" | "skipped"
    instances: int
    millis: float
    witness: str | None = None

    def to_line(self) -> str:
        w = f"  witness={self.witness}" if self.witness else ""
        return (
            f"{self.claim_id}: {self.status} "
            f"({self.instances} instances, {self.millis:.0f} ms, "
            f"params={self.params}){w}"
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "id": self.claim_id,
                "params": self.params,
                "status": self.status,
                "witness": self.witness,
                "count": self.instances,
                "millis": round(self.millis, 1),
            }
        )


# Each checker returns (status, witness, instance_count, params).
Checker = Callable[[int, int, Oracle], tuple[str, str | None, int, dict]]


def _check_noleft(max_pins, x_bound, oracle):
    count = 0
    for p in positions_up_to(max_pins):
        o = oracle.misere_outcome(p)
        count += 1
        if o is Outcome.L:
            return "refuted", str(p), count, {"max_pins": max_pins}
        m = p.total_pins % 3
        allowed = {1: {Outcome.R}, 2: {Outcome.R, Outcome.P}, 0: {Outcome.R, Outcome.N}}[m]
        if o not in allowed:
            return "refuted", f"{p} -> {o.value}", count, {"max_pins": max_pins}
    return "confirmed", None, count, {"max_pins": max_pins}


def _check_kstratlemma(max_pins, x_bound, oracle):
    g_bound, summand_bound = min(max_pins, 10), min(x_bound, 8)
    count = 0
    for g in positions_up_to(g_bound):
        for _, gl in moves(g, Player.LEFT):
            for x in positions_up_to(summand_bound):
                count += 1
                a = oracle.misere_outcome(g + x)
                b = oracle.misere_outcome(gl + S1 + x)
                if not outcome_geq(a, b):
                    return (
                        "refuted",
                        f"G={g} GL={gl} X={x}: {a.value} !>= {b.value}",
                        count,
                        {"g_bound": g_bound, "x_bound": summand_bound},
                    )
    return "confirmed", None, count, {"g_bound": g_bound, "x_bound": summand_bound}


def _check_leftprefers(max_pins, x_bound, oracle):
    g_bound = min(max_pins, 14)
    count = 0
    for g in positions_up_to(g_bound):
        if not oracle.wins_moving_first(g + S1, Player.LEFT):
            continue
        count += 1
        if oracle.wins_moving_first(g, Player.RIGHT):
            return "refuted", str(g), count, {"g_bound": g_bound}
    return "confirmed", None, count, {"g_bound": g_bound}


def _check_211(max_pins, x_bound, oracle):
    two_squares = Position((1, 1))
    bound = min(x_bound, 9)
    v = geq_bounded(S2, two_squares, bound, oracle)
    if v.distinguished:
        return "refuted", v.to_record(), 1, {"bound": bound}
    # strictness: the empty summand already separates the outcomes
    if oracle.misere_outcome(S2) == oracle.misere_outcome(two_squares):
        return "refuted", "outcomes agree at X=0", 2, {"bound": bound}
    # and the reverse inequality fails immediately
    back = geq_bounded(two_squares, S2, 0, oracle)
    if not back.distinguished:
        return "refuted", "reverse inequality not refuted", 3, {"bound": bound}
    return "confirmed", None, 3, {"bound": bound}


def _check_reducelemma(max_pins, x_bound, oracle):
    # As a two-option form {(k-1)S1+jS2 | kS1+(j-1)S2}, the outcome recursion
    # must agree with the full game tree on every square/domino sum.
    count = 0
    for j in range(1, max_pins // 2 + 1):
        for k in range(1, max_pins - 2 * j + 1):
            count += 1
            g = Position((1,) * k + (2,) * j)
            gl = Position((1,) * (k - 1) + (2,) * j)
            gr = Position((1,) * k + (2,) * (j - 1))
            left_first = not oracle.wins_moving_first(gl, Player.RIGHT)
            right_first = not oracle.wins_moving_first(gr, Player.LEFT)
            if left_first != oracle.wins_moving_first(g, Player.LEFT) or (
                right_first != oracle.wins_moving_first(g, Player.RIGHT)
            ):
                return "refuted", f"k={k} j={j}", count, {"max_pins": max_pins}
    return "confirmed", None, count, {"max_pins": max_pins}


def _check_kreduce(max_pins, x_bound, oracle):
    n_bound, b = 20, 12
    big = Oracle(n_bound + 2 * ((n_bound + 2) // 3) + b)  # reduced form can outweigh n
    count = 0
    for n in range(n_bound + 1):
        count += 1
        v = indistinguishable_bounded(
            Position((n,)), reduce_position(Position((n,))).as_position(), b, big
        )
        if v.distinguished:
            return "refuted", v.to_record(), count, {"n_bound": n_bound, "bound": b}
    return "confirmed", None, count, {"n_bound": n_bound, "bound": b}


def _check_12outcome(max_pins, x_bound, oracle):
    count = 0
    for j in range(max_pins // 2 + 1):
        for k in range(max_pins - 2 * j + 1):
            count += 1
            g = Position((1,) * k + (2,) * j)
            if fast_outcome_kj(k, j) != oracle.misere_outcome(g):
                return "refuted", f"k={k} j={j}", count, {"max_pins": max_pins}
    return "confirmed", None, count, {"max_pins": max_pins}


def _check_zerocor(max_pins, x_bound, oracle):
    unit = Position((1, 2))
    count = 0
    for x in positions_up_to(x_bound):
        count += 1
        if oracle.misere_outcome(unit + x) != oracle.misere_outcome(x):
            return "refuted", str(x), count, {"x_bound": x_bound}
    return "confirmed", None, count, {"x_bound": x_bound}


def _check_multiple_of_3(max_pins, x_bound, oracle):
    count = 0
    for n in (3, 6, 9):
        strip = Position((n,))
        for x in positions_up_to(min(x_bound, 9)):
            count += 1
            if oracle.misere_outcome(strip + x) != oracle.misere_outcome(x):
                return "refuted", f"n={n} X={x}", count, {"n_max": 9, "x_bound": 9}
    return "confirmed", None, count, {"n_max": 9, "x_bound": 9}


def _check_monoid_partition(max_pins, x_bound, oracle):
    count = 0
    for p in positions_up_to(max_pins):
        count += 1
        o = outcome_from_value(monoid_value(p))
        if o is Outcome.L or o != oracle.misere_outcome(p):
            return "refuted", str(p), count, {"max_pins": max_pins}
    return "confirmed", None, count, {"max_pins": max_pins}


def _check_xy(max_pins, x_bound, oracle):
    count = 0
    for p in positions_up_to(max_pins):
        count += 1
        if fast_outcome(p) != oracle.misere_outcome(p):
            return "refuted", str(p), count, {"max_pins": max_pins}
    return "confirmed", None, count, {"max_pins": max_pins}


def _check_howtowin(max_pins, x_bound, oracle):
    count = 0
    for p in positions_up_to(max_pins):
        for who in Player:
            count += 1
            advice = best_move(p, who)
            should_win = oracle.wins_moving_first(p, who)
            if advice.immediate_win:
                ok = should_win and not moves(p, who)
            elif advice.winning:
                ok = should_win and not oracle.wins_moving_first(
                    advice.result, who.opponent
                )
                ok = ok and not advice.from_fallback
            else:
                ok = not should_win
            if not ok:
                return "refuted", f"{p} {who.value}", count, {"max_pins": max_pins}
    return "confirmed", None, count, {"max_pins": max_pins}


def _check_inverse_pair(max_pins, x_bound, oracle):
    checks = [
        (S1, Outcome.R),
        (S2, Outcome.P),
        (Position((1, 2)), Outcome.N),
        (Position(()), Outcome.N),
    ]
    for p, expected in checks:
        if oracle.misere_outcome(p) != expected:
            return "refuted", str(p), len(checks), {}
    return "confirmed", None, len(checks), {}


CLAIMS: dict[str, Checker] = {
    "lemma-noleft": _check_noleft,
    "lemma-kstratlemma": _check_kstratlemma,
    "corollary-leftprefers": _check_leftprefers,
    "corollary-211": _check_211,
    "lemma-reducelemma": _check_reducelemma,
    "thm-kreduce": _check_kreduce,
    "thm-12outcome": _check_12outcome,
    "corollary-zerocor": _check_zerocor,
    "corollary-multiple-of-3": _check_multiple_of_3,
    "monoid-partition": _check_monoid_partition,
    "thm-xy": _check_xy,
    "thm-howtowin": _check_howtowin,
    "inverse-pair": _check_inverse_pair,
}


def run_suite(
    suite: list[str] | None = None,
    max_pins: int = 18,
    x_bound: int = 15,
    oracle: Oracle | None = None,
) -> list[ClaimReport]:
    """Run the named claims (None or ["all"] = every claim, in registry order)."""
    if suite is None or suite == ["all"]:
        suite = list(CLAIMS)
    for cid in suite:
        if cid not in CLAIMS:
            raise UnknownClaimError(f"unknown claim id: {cid}")
    oracle = oracle or Oracle(max(30, max_pins + x_bound))
    reports = []
    for cid in suite:
        start = time.perf_counter()
        status, witness, count, params = CLAIMS[cid](max_pins, x_bound, oracle)
        millis = (time.perf_counter() - start) * 1000
        reports.append(ClaimReport(cid, params, status, count, millis, witness))
    return reports
