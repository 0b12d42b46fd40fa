"""
Tests for the 2SAT solver, checked against truth tables.
"""
import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tetrachrome.errors import UsageError
from tetrachrome.twosat import TwoSatInstance, lit, lit_value, neg, solve_2sat


def _brute(inst):
    for assignment in itertools.product((False, True), repeat=inst.num_vars):
        if inst.satisfied_by(assignment):
            return True
    return False


@st.composite
def instances(draw):
    num_vars = draw(st.integers(min_value=1, max_value=6))
    literal = st.integers(min_value=0, max_value=2 * num_vars - 1)
    inst = TwoSatInstance(num_vars)
    for a, b in draw(st.lists(st.tuples(literal, literal), max_size=14)):
        inst.add_clause(a, b)
    return inst


def test_literal_encoding():
    assert lit(3) == 6
    assert lit(3, False) == 7
    assert neg(lit(3)) == lit(3, False)
    assert lit_value([False, True], lit(1))
    assert lit_value([False, True], lit(0, False))


def test_unit_clauses_force_values():
    inst = TwoSatInstance(2)
    inst.add_clause(lit(0))
    inst.add_clause(lit(1, False))
    assert solve_2sat(inst) == [True, False]


def test_contradiction():
    inst = TwoSatInstance(1)
    inst.add_clause(lit(0))
    inst.add_clause(lit(0, False))
    assert solve_2sat(inst) is None


def test_implication_chain():
    # x0 -> x1 -> x2, x0 forced, x2 forbidden
    inst = TwoSatInstance(3)
    inst.add_implication(lit(0), lit(1))
    inst.add_implication(lit(1), lit(2))
    inst.add_clause(lit(0))
    inst.add_clause(lit(2, False))
    assert solve_2sat(inst) is None


def test_no_clauses():
    assert len(solve_2sat(TwoSatInstance(3))) == 3


def test_literal_out_of_range():
    with pytest.raises(UsageError):
        TwoSatInstance(1).add_clause(lit(1))


@settings(max_examples=200, deadline=None)
@given(instances())
def test_agrees_with_truth_table(inst):
    model = solve_2sat(inst)
    assert (model is not None) == _brute(inst)
    if model is not None:
        assert inst.satisfied_by(model)


@pytest.mark.slow
@settings(max_examples=10_000, deadline=None)
@given(instances())
def test_truth_table_sweep(inst):
    model = solve_2sat(inst)
    assert (model is not None) == _brute(inst)
    if model is not None:
        assert inst.satisfied_by(model)
