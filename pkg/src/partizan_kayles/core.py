"""Positions and moves for partizan kayles.

A position is a disjunctive sum of strips; Left fills a single empty cell,
Right fills two adjacent empty cells.  Filling cells splits a strip in two,
so the whole game lives on multisets of strip lengths.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

MAX_STRIP_LENGTH = 10**6
MAX_COMPONENTS = 10**4


class Player(Enum):
    LEFT = "L"
    RIGHT = "R"

    @property
    def opponent(self) -> "Player":
        return Player.RIGHT if self is Player.LEFT else Player.LEFT

    @property
    def piece_size(self) -> int:
        # Left removes one free cell per move, Right removes two.
        return 1 if self is Player.LEFT else 2


class ParseError(ValueError):
    """Raised when a position string cannot be read."""


class IllegalMoveError(ValueError):
    """Raised when a move does not apply to the given position."""


@dataclass(frozen=True)
class Position:
    """Immutable multiset of strip lengths, stored sorted descending.

    Zero-length strips are the empty game and are dropped on construction,
    so two positions are equal exactly when their multisets agree.
    """

    components: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for c in self.components:
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"strip lengths must be non-negative integers, got {c!r}")
        normalized = tuple(sorted((c for c in self.components if c > 0), reverse=True))
        object.__setattr__(self, "components", normalized)

    @property
    def total_pins(self) -> int:
        return sum(self.components)

    @property
    def is_empty(self) -> bool:
        return not self.components

    def __add__(self, other: "Position") -> "Position":
        """Disjunctive sum (multiset union)."""
        return Position(self.components + other.components)

    def replacing(self, index: int, parts: tuple[int, ...]) -> "Position":
        """New position with the component at `index` replaced by `parts`."""
        rest = self.components[:index] + self.components[index + 1:]
        return Position(rest + parts)

    def __str__(self) -> str:
        if not self.components:
            return "0"
        return "+".join(str(c) for c in self.components)


@dataclass(frozen=True)
class Move:
    """A piece placement: `offset` is the 0-based cell within the chosen strip.

    Left's square occupies one cell; Right's domino occupies offset and
    offset+1.
    """

    player: Player
    component_index: int
    offset: int


_TOKEN_SPLIT = re.compile(r"[+,\s]+")


def parse_position(text: str) -> Position:
    """Parse `+`/comma/whitespace separated strip lengths; zeros are dropped."""
    tokens = [t for t in _TOKEN_SPLIT.split(text.strip()) if t]
    lengths = []
    for tok in tokens:
        try:
            n = int(tok)
        except ValueError:
            raise ParseError(f"not a strip length: {tok!r}") from None
        if n < 0:
            raise ParseError(f"negative strip length: {tok!r}")
        if n > MAX_STRIP_LENGTH:
            raise ParseError(f"strip length too large: {tok!r}")
        lengths.append(n)
    if len(lengths) > MAX_COMPONENTS:
        raise ParseError(f"too many components ({len(lengths)} > {MAX_COMPONENTS})")
    return Position(tuple(lengths))


def format_position(p: Position) -> str:
    """Canonical text form: descending lengths joined by `+`, empty as "0"."""
    return str(p)


def moves(p: Position, who: Player) -> list[tuple[Move, Position]]:
    """All legal moves for `who`, deduplicated by resulting position.

    Symmetric placements and equal components produce the same option; each
    retained entry keeps one concrete witness move.
    """
    size = who.piece_size
    out: list[tuple[Move, Position]] = []
    seen: set[tuple[int, ...]] = set()
    for idx, n in enumerate(p.components):
        if idx and p.components[idx - 1] == n:
            continue  # same strip length, identical splits
        for off in range(n - size + 1):
            q = p.replacing(idx, (off, n - size - off))
            if q.components in seen:
                continue
            seen.add(q.components)
            out.append((Move(who, idx, off), q))
    return out


def apply_move(p: Position, m: Move) -> Position:
    """Apply a legal move; raises IllegalMoveError otherwise."""
    if not 0 <= m.component_index < len(p.components):
        raise IllegalMoveError(f"no component at index {m.component_index} in {p}")
    n = p.components[m.component_index]
    size = m.player.piece_size
    if not 0 <= m.offset <= n - size:
        raise IllegalMoveError(
            f"offset {m.offset} out of range for {m.player.value} on strip of length {n}"
        )
    return p.replacing(m.component_index, (m.offset, n - size - m.offset))
