from hypothesis import given
from hypothesis import strategies as st

from partizan_kayles import (
    Outcome,
    Position,
    ReducedForm,
    census,
    fast_outcome,
    fast_outcome_kj,
    geq_bounded,
    indistinguishable_bounded,
    misere_outcome,
    monoid_value,
    outcome_from_value,
    outcome_geq,
    positions_up_to,
    reduce_position,
    reduce_strip,
)

positions = st.lists(st.integers(min_value=1, max_value=40), max_size=8).map(
    lambda xs: Position(tuple(xs))
)


def test_reduce_strip_small():
    assert reduce_strip(0) == ReducedForm(0, 0)
    assert reduce_strip(1) == ReducedForm(1, 0)
    assert reduce_strip(2) == ReducedForm(0, 1)
    assert reduce_strip(3) == ReducedForm(1, 1)
    assert reduce_strip(4) == ReducedForm(2, 1)
    assert reduce_strip(5) == ReducedForm(1, 2)
    assert reduce_strip(6) == ReducedForm(2, 2)


def test_reduce_position():
    assert reduce_position(Position((4, 5))) == ReducedForm(3, 3)
    assert reduce_position(Position(())) == ReducedForm(0, 0)
    assert reduce_position(Position((6,))) == ReducedForm(2, 2)


def test_monoid_value_examples():
    assert monoid_value(Position((1, 2))) == 0
    assert monoid_value(Position((3,))) == 0
    assert monoid_value(Position((4, 4, 5))) == 1


def test_outcome_from_value():
    assert outcome_from_value(0) is Outcome.N
    assert outcome_from_value(-1) is Outcome.P
    assert outcome_from_value(7) is Outcome.R
    assert outcome_from_value(-6) is Outcome.N
    assert outcome_from_value(-2) is Outcome.R


def test_fast_outcome_kj():
    assert fast_outcome_kj(2, 2) is Outcome.N
    assert fast_outcome_kj(3, 1) is Outcome.R
    assert fast_outcome_kj(1, 3) is Outcome.R
    assert fast_outcome_kj(0, 1) is Outcome.P
    assert fast_outcome_kj(0, 0) is Outcome.N


def test_fast_outcome_examples():
    assert fast_outcome(Position((4, 5))) is Outcome.N
    # reconciled against the brute-force oracle: two length-5 strips are a
    # right win (census x=0, y=2, x+2y = 4 ≡ 1 mod 3)
    assert fast_outcome(Position((5, 5))) is Outcome.R
    assert misere_outcome(Position((5, 5))) is Outcome.R
    assert fast_outcome(Position((1,))) is Outcome.R
    assert fast_outcome(Position((3, 3, 3))) is Outcome.N


def test_census():
    assert census(Position((4, 5, 6, 1))) == (2, 1)


def test_outcome_geq_lattice():
    assert outcome_geq(Outcome.L, Outcome.P)
    assert not outcome_geq(Outcome.N, Outcome.P)
    assert not outcome_geq(Outcome.P, Outcome.N)
    assert outcome_geq(Outcome.P, Outcome.R)
    assert all(outcome_geq(o, o) for o in Outcome)


def test_distinguish_s2_vs_two_squares(oracle):
    v = indistinguishable_bounded(Position((2,)), Position((1, 1)), 4, oracle)
    assert v.distinguished
    assert v.witness == Position(())
    assert v.outcomes == (Outcome.P, Outcome.R)


def test_equivalences(oracle):
    assert not indistinguishable_bounded(
        Position((3,)), Position((1, 2)), 10, oracle
    ).distinguished
    assert not indistinguishable_bounded(
        Position((6,)), Position(()), 10, oracle
    ).distinguished


def test_geq_bounded(oracle):
    assert not geq_bounded(Position((2,)), Position((1, 1)), 9, oracle).distinguished
    back = geq_bounded(Position((1, 1)), Position((2,)), 0, oracle)
    assert back.distinguished and back.witness == Position(())
    assert not geq_bounded(Position((3, 2)), Position((3, 2)), 5, oracle).distinguished


def test_verdict_records(oracle):
    v = indistinguishable_bounded(Position((2,)), Position((1, 1)), 4, oracle)
    assert v.to_record() == "claim=2 equiv 1+1\tbound=4\twitness=0\toutcomes=P,R"
    ok = indistinguishable_bounded(Position((3,)), Position((1, 2)), 3, oracle)
    assert ok.to_record() == "claim=3 equiv 2+1\tbound=3\twitness=none"


@given(positions, positions)
def test_monoid_value_additive(p, q):
    assert monoid_value(p + q) == monoid_value(p) + monoid_value(q)


@given(positions)
def test_partition_consistency(p):
    assert outcome_from_value(monoid_value(p)) == fast_outcome(p)


def test_zero_element_small(oracle):
    unit = Position((1, 2))
    for x in positions_up_to(10):
        assert oracle.misere_outcome(unit + x) == oracle.misere_outcome(x)
