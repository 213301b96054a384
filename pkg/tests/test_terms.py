from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from hilbreg.errors import DegreeError, DimensionMismatch
from hilbreg.terms import (
    Ordering,
    Term,
    TermList,
    borel_closure,
    compare_degrevlex,
    elevations,
    format_term,
    is_borel_set,
    max_var,
    min_var,
    monomial_basis,
    parse_term,
)


def T(text, n=3):
    return parse_term(text, n)


def exponents(n, max_deg=4):
    return st.lists(st.integers(0, max_deg), min_size=n + 1, max_size=n + 1).map(Term)


def test_degree_two_basis_order_in_four_variables():
    got = [str(u) for u in monomial_basis(3, 2)]
    assert got == ["x3^2", "x3*x2", "x2^2", "x3*x1", "x2*x1", "x1^2", "x3*x0", "x2*x0", "x1*x0", "x0^2"]


def test_basis_matches_bruteforce_order():
    for n in range(1, 4):
        for t in range(0, 4):
            expected = oracles.sorted_desc(oracles.all_exponents(n, t))
            assert [tuple(u) for u in monomial_basis(n, t)] == expected
            assert len(monomial_basis(n, t)) == comb(n + t, n)


def test_comparison_examples():
    assert compare_degrevlex(T("x2^2"), T("x3*x1")) is Ordering.GT
    assert compare_degrevlex(T("x3*x0"), T("x1^2")) is Ordering.LT
    assert compare_degrevlex(T("x0^3"), T("x3^2")) is Ordering.GT
    assert compare_degrevlex(T("x1"), T("x1")) is Ordering.EQ


def test_compare_rejects_mixed_rings():
    with pytest.raises(DimensionMismatch):
        compare_degrevlex(Term((1, 0)), Term((1, 0, 0)))


def test_positions_are_one_based():
    basis = monomial_basis(3, 2)
    assert basis[1] == T("x3^2")
    assert basis.position(T("x0^2")) == 10
    with pytest.raises(IndexError):
        basis[0]


def test_min_max_var():
    assert min_var(T("x3*x1")) == 1
    assert max_var(T("x3*x1")) == 3
    with pytest.raises(DegreeError):
        min_var(Term((0, 0, 0, 0)))


def test_elevations_of_x2x0():
    # four moves: x0 -> x1, x2, x3 and x2 -> x3
    got = {str(u) for u in elevations(T("x2*x0"))}
    assert got == {"x2*x1", "x2^2", "x3*x2", "x3*x0"}
    assert {tuple(u) for u in elevations(T("x2*x0"))} == oracles.elevations(tuple(T("x2*x0")))


def test_borel_set_examples():
    assert is_borel_set([T("x3^2"), T("x3*x2"), T("x2^2"), T("x3*x1"), T("x2*x1")])
    assert not is_borel_set([T("x3^2"), T("x2^2")])
    with pytest.raises(DegreeError):
        is_borel_set([T("x3"), T("x2^2")])


def test_termlist_rejects_bad_order():
    with pytest.raises(ValueError):
        TermList([T("x0^2"), T("x3^2")])
    with pytest.raises(DegreeError):
        TermList([T("x3^2"), T("x3")])


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_term("y2", 3)
    with pytest.raises(DimensionMismatch):
        parse_term("x5", 3)
    assert parse_term("1", 2) == Term((0, 0, 0))


@given(exponents(3), exponents(3))
def test_comparator_agrees_with_oracle(u, v):
    expected = Ordering.GT if oracles.degrevlex_greater(u, v) else (
        Ordering.LT if oracles.degrevlex_greater(v, u) else Ordering.EQ)
    assert compare_degrevlex(u, v) is expected
    assert (u > v) == (expected is Ordering.GT)


@given(exponents(3), exponents(3), exponents(3))
def test_order_is_monomial(u, v, w):
    # compatible with multiplication
    if u > v:
        assert u * w > v * w


@given(exponents(4))
def test_format_parse_round_trip(u):
    assert parse_term(format_term(u), 4) == u


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_closure_is_smallest_closed_superset(n, t, data):
    basis = list(monomial_basis(n, t))
    seed = data.draw(st.lists(st.sampled_from(basis), min_size=1, max_size=3))
    closure = set(borel_closure(seed))
    assert set(seed) <= closure
    assert oracles.is_strongly_stable_set(closure)
    assert set(borel_closure(closure)) == closure
    # every closed superset of seed contains the closure
    bigger = set(borel_closure(seed + [basis[-1]]))
    assert closure <= bigger
