"""Exact solver and verification harness for misère-play partizan kayles."""

from .algebra import (
    DistinguishVerdict,
    ReducedForm,
    census,
    fast_outcome,
    fast_outcome_kj,
    geq_bounded,
    indistinguishable_bounded,
    monoid_value,
    outcome_from_value,
    outcome_geq,
    reduce_position,
    reduce_strip,
)
from .core import (
    IllegalMoveError,
    Move,
    ParseError,
    Player,
    Position,
    apply_move,
    format_position,
    moves,
    parse_position,
)
from .oracle import (
    Oracle,
    OracleBoundError,
    Outcome,
    OutcomeTable,
    misere_outcome,
    outcome_table,
    partitions,
    positions_up_to,
    wins_moving_first,
)
from .strategy import AnnotatedMove, MoveAdvice, best_move, winning_moves
from .verify import ClaimReport, run_suite

__all__ = [
    "AnnotatedMove",
    "ClaimReport",
    "DistinguishVerdict",
    "IllegalMoveError",
    "Move",
    "MoveAdvice",
    "Oracle",
    "OracleBoundError",
    "Outcome",
    "OutcomeTable",
    "ParseError",
    "Player",
    "Position",
    "ReducedForm",
    "apply_move",
    "best_move",
    "census",
    "fast_outcome",
    "fast_outcome_kj",
    "format_position",
    "geq_bounded",
    "indistinguishable_bounded",
    "misere_outcome",
    "monoid_value",
    "moves",
    "outcome_from_value",
    "outcome_geq",
    "outcome_table",
    "parse_position",
    "partitions",
    "positions_up_to",
    "reduce_position",
    "reduce_strip",
    "run_suite",
    "winning_moves",
    "wins_moving_first",
]

__version__ = "0.1.0"
