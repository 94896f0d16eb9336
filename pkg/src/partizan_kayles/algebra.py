"""Closed-form machinery for partizan kayles.

Every strip is equivalent, modulo the universe of kayles sums, to a sum of
single squares (length-1 strips) and dominoes (length-2 strips); the quotient
monoid is the integers under addition, with the outcome of any sum readable
off a census of component lengths mod 3.  This module also provides bounded
refutation testers for equivalence and inequality modulo the universe.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Position
from .oracle import Oracle, Outcome, positions_up_to


@dataclass(frozen=True)
class ReducedForm:
    """A sum k1 copies of the single square plus k2 copies of the domino."""

    k1: int
    k2: int

    def __add__(self, other: "ReducedForm") -> "ReducedForm":
        return ReducedForm(self.k1 + other.k1, self.k2 + other.k2)

    def as_position(self) -> Position:
        return Position((1,) * self.k1 + (2,) * self.k2)


def reduce_strip(n: int) -> ReducedForm:
    """Equivalent square/domino sum for a single strip of length n."""
    if n < 0:
        raise ValueError("strip length must be non-negative")
    k, r = divmod(n, 3)
    if r == 0:
        return ReducedForm(k, k)
    if r == 1:
        return ReducedForm(k + 1, k)
    return ReducedForm(k, k + 1)


def reduce_position(p: Position) -> ReducedForm:
    """Componentwise reduction; squares and dominoes are not cancelled here."""
    total = ReducedForm(0, 0)
    for n in p.components:
        total = total + reduce_strip(n)
    return total


def monoid_value(p: Position) -> int:
    """Image of p in the quotient monoid, which is (Z, +).

    Positive values are a surplus of squares, negative a surplus of dominoes;
    a square and a domino cancel.
    """
    v = 0
    for n in p.components:
        r = n % 3
        if r == 1:
            v += 1
        elif r == 2:
            v -= 1
    return v


def outcome_from_value(v: int) -> Outcome:
    """Outcome class of the monoid element v.  Left-win never occurs."""
    if v > 0:
        return Outcome.R
    if v == 0:
        return Outcome.N
    r = (-v) % 3
    if r == 0:
        return Outcome.N
    return Outcome.P if r == 1 else Outcome.R


def fast_outcome_kj(k: int, j: int) -> Outcome:
    """Outcome of k squares plus j dominoes, in constant time."""
    if k < 0 or j < 0:
        raise ValueError("counts must be non-negative")
    if k == j:
        return Outcome.N
    if k > j:
        return Outcome.R
    r = (k + 2 * j) % 3
    if r == 0:
        return Outcome.N
    return Outcome.R if r == 1 else Outcome.P


def census(p: Position) -> tuple[int, int]:
    """(x, y) = counts of components of length 1 and 2 mod 3."""
    x = sum(1 for n in p.components if n % 3 == 1)
    y = sum(1 for n in p.components if n % 3 == 2)
    return x, y


def fast_outcome(p: Position) -> Outcome:
    """Outcome of an arbitrary kayles sum without reducing it first."""
    x, y = census(p)
    return fast_outcome_kj(x, y)


def outcome_geq(a: Outcome, b: Outcome) -> bool:
    """Partial order on outcomes from Left's perspective.

    L is the top, R the bottom; N and P are incomparable.
    """
    return a == b or a is Outcome.L or b is Outcome.R


@dataclass(frozen=True)
class DistinguishVerdict:
    """Result of a bounded search for a distinguishing/violating summand.

    `witness` is None when no summand X with at most `bound` pins separates
    the two games; otherwise `outcomes` records the differing (or
    order-violating) pair observed at g+X vs h+X.
    """

    claim: str
    bound: int
    witness: Position | None = None
    outcomes: tuple[Outcome, Outcome] | None = None

    @property
    def distinguished(self) -> bool:
        return self.witness is not None

    def to_record(self) -> str:
        if self.witness is None:
            return f"claim={self.claim}\tbound={self.bound}\twitness=none"
        a, b = self.outcomes
        return (
            f"claim={self.claim}\tbound={self.bound}"
            f"\twitness={self.witness}\toutcomes={a.value},{b.value}"
        )

    def __str__(self) -> str:
        if self.witness is None:
            return f"{self.claim}: indistinguishable up to bound {self.bound}"
        a, b = self.outcomes
        return f"{self.claim}: distinguished by X={self.witness}: {a.value} vs {b.value}"


def indistinguishable_bounded(
    g: Position, h: Position, bound: int, oracle: Oracle | None = None
) -> DistinguishVerdict:
    """Search for a summand X (<= bound pins) with different outcomes at g+X, h+X.

    Returns the first witness in enumeration order (totals ascending,
    descending-lexicographic partitions within each total), or the bounded
    all-clear verdict.
    """
    oracle = oracle or Oracle(max(g.total_pins, h.total_pins) + bound)
    claim = f"{g} equiv {h}"
    for x in positions_up_to(bound):
        og = oracle.misere_outcome(g + x)
        oh = oracle.misere_outcome(h + x)
        if og != oh:
            return DistinguishVerdict(claim, bound, x, (og, oh))
    return DistinguishVerdict(claim, bound)


def geq_bounded(
    g: Position, h: Position, bound: int, oracle: Oracle | None = None
) -> DistinguishVerdict:
    """Search for a summand X violating outcome(g+X) >= outcome(h+X)."""
    oracle = oracle or Oracle(max(g.total_pins, h.total_pins) + bound)
    claim = f"{g} geq {h}"
    for x in positions_up_to(bound):
        og = oracle.misere_outcome(g + x)
        oh = oracle.misere_outcome(h + x)
        if not outcome_geq(og, oh):
            return DistinguishVerdict(claim, bound, x, (og, oh))
    return DistinguishVerdict(claim, bound)
