"""Ground-truth misère outcome solver by exhaustive memoized search.

Under misère play a player with no legal move wins (the opponent made the
last placement).  Everything else in the package is checked against this
solver, so it deliberately stays a plain game-tree search.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterator

from .core import Player, Position, moves

DEFAULT_BOUND = 30


class Outcome(Enum):
    """Misère outcome classes: who wins under optimal play."""

    L = "L"  # Left wins regardless of who moves first
    R = "R"  # Right wins regardless
    N = "N"  # the next (first) player wins
    P = "P"  # the previous (second) player wins


class OracleBoundError(RuntimeError):
    """Position too large for exhaustive search; use algebra.fast_outcome."""


def partitions(m: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of m in descending-lexicographic order."""
    if m == 0:
        yield ()
        return
    if max_part is None or max_part > m:
        max_part = m
    for first in range(max_part, 0, -1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


def positions_up_to(max_pins: int) -> Iterator[Position]:
    """All positions with at most max_pins pins, smallest totals first."""
    for m in range(max_pins + 1):
        for parts in partitions(m):
            yield Position(parts)


class Oracle:
    """Memoized exhaustive solver, bounded by total pin count.

    The memo is keyed by (component multiset, player to move).  Entries are
    idempotent, so concurrent duplicate computation would be harmless; the
    search itself uses an explicit stack rather than recursion.
    """

    def __init__(self, bound: int = DEFAULT_BOUND):
        self.bound = bound
        self._memo: dict[tuple[tuple[int, ...], Player], bool] = {}

    def wins_moving_first(self, p: Position, who: Player) -> bool:
        """True iff `who`, moving first in p, has a winning strategy."""
        if p.total_pins > self.bound:
            raise OracleBoundError(
                f"{p.total_pins} pins exceeds oracle bound {self.bound}; "
                "use algebra.fast_outcome for large positions"
            )
        memo = self._memo
        root = (p.components, who)
        stack = [root]
        while stack:
            key = stack[-1]
            if key in memo:
                stack.pop()
                continue
            comps, player = key
            options = moves(Position(comps), player)
            if not options:
                memo[key] = True  # no move available: mover wins under misère
                stack.pop()
                continue
            opp = player.opponent
            won = False
            pending = []
            for _, q in options:
                child = (q.components, opp)
                r = memo.get(child)
                if r is False:
                    won = True
                    break
                if r is None:
                    pending.append(child)
            if won:
                memo[key] = True
                stack.pop()
            elif pending:
                stack.extend(pending)
            else:
                memo[key] = False
                stack.pop()
        return memo[root]

    def misere_outcome(self, p: Position) -> Outcome:
        """Outcome class of p: N, P, L or R (L never occurs in this universe)."""
        left_first = self.wins_moving_first(p, Player.LEFT)
        right_first = self.wins_moving_first(p, Player.RIGHT)
        if left_first and right_first:
            return Outcome.N
        if not left_first and not right_first:
            return Outcome.P
        return Outcome.L if left_first else Outcome.R


class OutcomeTable:
    """Outcome of every position with at most max_pins pins."""

    def __init__(self, max_pins: int, entries: dict[Position, Outcome]):
        self.max_pins = max_pins
        self.entries = entries

    def __getitem__(self, p: Position) -> Outcome:
        return self.entries[p]

    def __len__(self) -> int:
        return len(self.entries)

    def export_lines(self) -> list[str]:
        """Line-oriented dump: `<position>\\t<outcome>` in enumeration order."""
        return [f"{p}\t{o.value}" for p, o in self.entries.items()]


def outcome_table(max_pins: int, oracle: Oracle | None = None) -> OutcomeTable:
    """Solve every partition of every m <= max_pins, in deterministic order."""
    oracle = oracle or Oracle(max(max_pins, DEFAULT_BOUND))
    entries = {p: oracle.misere_outcome(p) for p in positions_up_to(max_pins)}
    return OutcomeTable(max_pins, entries)


_shared = Oracle()


def wins_moving_first(p: Position, who: Player) -> bool:
    return _shared.wins_moving_first(p, who)


def misere_outcome(p: Position) -> Outcome:
    return _shared.misere_outcome(p)
