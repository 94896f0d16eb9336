import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from partizan_kayles import (
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

L, R = Player.LEFT, Player.RIGHT

positions = st.lists(st.integers(min_value=1, max_value=12), max_size=6).map(
    lambda xs: Position(tuple(xs))
)


def test_parse_basic():
    assert parse_position("3+5+1").components == (5, 3, 1)
    assert parse_position("").components == ()
    assert parse_position("0+2").components == (2,)
    assert parse_position("2, 3 4").components == (4, 3, 2)


def test_parse_errors():
    with pytest.raises(ParseError, match="x"):
        parse_position("3+x")
    with pytest.raises(ParseError):
        parse_position("-2")
    with pytest.raises(ParseError):
        parse_position(str(10**6 + 1))


def test_canonical_order_and_equality():
    assert Position((1, 3, 2)) == Position((3, 2, 1))
    assert hash(Position((1, 3))) == hash(Position((3, 1)))
    assert Position((0, 0)) == Position(())


def test_format():
    assert format_position(Position(())) == "0"
    assert format_position(Position((1, 5, 3))) == "5+3+1"
    assert parse_position(format_position(Position((2, 7)))) == Position((2, 7))


def test_moves_on_strip_3():
    assert {q for _, q in moves(Position((3,)), L)} == {Position((2,)), Position((1, 1))}
    assert {q for _, q in moves(Position((3,)), R)} == {Position((1,))}


def test_no_moves():
    assert moves(Position((1,)), R) == []
    assert moves(Position(()), L) == []


def test_apply_move_examples():
    assert apply_move(Position((6,)), Move(L, 0, 1)) == Position((4, 1))
    assert apply_move(Position((6,)), Move(R, 0, 2)) == Position((2, 2))
    assert apply_move(Position((2,)), Move(R, 0, 0)) == Position(())


def test_apply_move_validation():
    with pytest.raises(IllegalMoveError):
        apply_move(Position((3,)), Move(L, 1, 0))
    with pytest.raises(IllegalMoveError):
        apply_move(Position((3,)), Move(R, 0, 2))


def test_single_strip_option_counts():
    for n in range(1, 15):
        assert len(moves(Position((n,)), L)) == math.ceil(n / 2)
    for n in range(2, 15):
        assert len(moves(Position((n,)), R)) == math.ceil((n - 1) / 2)


@given(positions, st.sampled_from([L, R]))
def test_pin_count_drops_by_piece_size(p, who):
    for _, q in moves(p, who):
        assert q.total_pins == p.total_pins - who.piece_size


@given(positions, st.sampled_from([L, R]))
def test_options_are_deduplicated(p, who):
    results = [q for _, q in moves(p, who)]
    assert len(results) == len(set(results))


@given(positions, st.sampled_from([L, R]))
def test_witness_moves_reproduce_options(p, who):
    for m, q in moves(p, who):
        assert apply_move(p, m) == q
