"""Optimal move selection.

The winning rule: Left plays at the end of a strip of length 1 mod 3 when one
exists, else at the end of a strip of length 2 mod 3; Right plays at the end
of a strip of length 2 mod 3 when one exists, else one away from the end of a
strip of length 1 mod 3.  Positions whose strips are all multiples of 3 fall
outside that rule but are next-player wins, so we extend it: play at (Left)
or at the end of (Right) a multiple-of-3 strip.  Every emitted move is
validated against the outcome formula, with an exhaustive scan as a fallback
that is never expected to fire.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .algebra import fast_outcome
from .core import Move, Player, Position, apply_move, moves
from .oracle import Outcome

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class AnnotatedMove:
    move: Move
    result: Position
    outcome: Outcome
    winning: bool


@dataclass(frozen=True)
class MoveAdvice:
    """Advice for the player to move.

    Exactly one of three shapes: `immediate_win` (no legal move, mover wins
    under misère), a winning move, or `no winning move` carrying a legal
    fallback move so an engine can always play.  `from_fallback` marks the
    rare case where the closed-form rule failed validation and the move came
    from scanning all options.
    """

    position_outcome: Outcome
    immediate_win: bool = False
    move: Move | None = None
    result: Position | None = None
    result_outcome: Outcome | None = None
    winning: bool = False
    from_fallback: bool = False


def _mover_wins(outcome: Outcome, who: Player) -> bool:
    """Does `who`, moving first, win a position with this outcome?"""
    if outcome is Outcome.N:
        return True
    if outcome is Outcome.P:
        return False
    return (outcome is Outcome.L) == (who is Player.LEFT)


def _is_winning_result(result: Position, mover: Player) -> bool:
    """A move wins iff the opponent, moving next, loses the result."""
    return not _mover_wins(fast_outcome(result), mover.opponent)


def _rule_move(p: Position, who: Player) -> Move | None:
    """The closed-form winning move, or None if no strip class matches.

    Components are sorted descending, so the first index in a residue class
    is the longest such strip (ties broken by lowest index).
    """

    def first_index(residue: int, min_len: int = 1) -> int | None:
        for idx, n in enumerate(p.components):
            if n % 3 == residue and n >= min_len:
                return idx
        return None

    if who is Player.LEFT:
        for residue in (1, 2, 0):
            idx = first_index(residue)
            if idx is not None:
                return Move(who, idx, 0)
        return None
    idx = first_index(2)
    if idx is not None:
        return Move(who, idx, p.components[idx] - 2)
    idx = first_index(1, min_len=4)
    if idx is not None:
        return Move(who, idx, 1)
    idx = first_index(0, min_len=3)
    if idx is not None:
        return Move(who, idx, p.components[idx] - 2)
    return None


def winning_moves(p: Position, who: Player) -> list[AnnotatedMove]:
    """Every legal move annotated with the resulting outcome and win flag."""
    out = []
    for m, q in moves(p, who):
        out.append(AnnotatedMove(m, q, fast_outcome(q), _is_winning_result(q, who)))
    return out


def best_move(p: Position, who: Player) -> MoveAdvice:
    """Winning move per the closed-form rule, validated; see MoveAdvice."""
    outcome = fast_outcome(p)
    options = moves(p, who)
    if not options:
        return MoveAdvice(outcome, immediate_win=True)
    if not _mover_wins(outcome, who):
        m, q = options[0]  # least-bad placeholder: first legal move
        return MoveAdvice(outcome, move=m, result=q, result_outcome=fast_outcome(q))

    m = _rule_move(p, who)
    if m is not None:
        q = apply_move(p, m)
        if _is_winning_result(q, who):
            return MoveAdvice(
                outcome, move=m, result=q, result_outcome=fast_outcome(q), winning=True
            )
        log.warning("rule move %s failed validation on %s; scanning options", m, p)

    for cand, q in options:
        if _is_winning_result(q, who):
            return MoveAdvice(
                outcome,
                move=cand,
                result=q,
                result_outcome=fast_outcome(q),
                winning=True,
                from_fallback=True,
            )
    # Unreachable if the outcome formula is right; report honestly anyway.
    log.error("no winning option found on %s despite winnable outcome %s", p, outcome)
    m, q = options[0]
    return MoveAdvice(outcome, move=m, result=q, result_outcome=fast_outcome(q))
