from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import CORPUS
from hilbreg.borel import BorelIdeal, enumerate_borel
from hilbreg.errors import DomainError, NotAdmissible, NotStronglyStable
from hilbreg.hilbert import (
    IntegerPolynomial,
    binomial,
    context,
    format_polynomial,
    gotzmann_decomposition,
    gotzmann_number,
    hilbert_function,
    hilbert_polynomial,
    is_admissible,
    macaulay_growth,
    macaulay_representation,
    parse_polynomial,
)
from hilbreg.terms import parse_term

P = parse_polynomial


def ideal(n, *gens):
    return BorelIdeal(n, tuple(parse_term(g, n) for g in gens))


def test_generalized_binomial():
    assert binomial(5, 2) == 10
    assert binomial(-1, 2) == 1
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0


@pytest.mark.parametrize("text, values", [
    ("2t+2", {0: 2, 5: 12}),
    ("(t^2+3t+2)/2", {0: 1, 3: 10}),
    ("3*t - 1", {2: 5}),
    ("t^2/2 + t/2", {4: 10}),
    ("7", {100: 7}),
])
def test_parse_values(text, values):
    p = P(text)
    assert all(p(t) == v for t, v in values.items())


@pytest.mark.parametrize("bad", ["", "2t+", "t^t", "1/0", "2x", "(t+1"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        P(bad)


def test_format_pulls_out_denominator():
    assert format_polynomial(P("(t^2+3t+2)/2")) == "(t^2+3*t+2)/2"
    assert str(P("2t+2")) == "2*t+2"


@pytest.mark.parametrize("text, seq", [
    ("2t+2", [1, 1, 0]),
    ("2t+1", [1, 1]),
    ("t+1", [1]),
    ("4", [0, 0, 0, 0]),
    ("3t+1", [1, 1, 1, 0]),
    ("(t^2+3t+2)/2", [2]),
])
def test_gotzmann_decompositions(text, seq):
    assert gotzmann_decomposition(P(text)) == seq


@pytest.mark.parametrize("text", ["2t-3", "3t-1", "(3t-2)/2", "-1", "t/2", "2t"])
def test_not_admissible(text):
    assert not is_admissible(P(text))
    with pytest.raises(NotAdmissible):
        gotzmann_number(P(text))


def test_zero_polynomial_has_empty_decomposition():
    assert gotzmann_decomposition(P("0")) == []


@pytest.mark.parametrize("text", ["2t+2", "2t+1", "3t+1", "3", "t+2", "3t"])
def test_gotzmann_matches_search_oracle(text):
    p = P(text)
    values = {t: p(t) for t in range(0, 6)}
    assert gotzmann_number(p) == len(oracles.gotzmann_search(values, max_deg=p.degree))


@given(st.lists(st.integers(0, 3), min_size=1, max_size=7))
def test_decomposition_round_trip(raw):
    seq = sorted(raw, reverse=True)
    p = IntegerPolynomial()
    for i, a in enumerate(seq, start=1):
        p = p + IntegerPolynomial.binomial_in_t(a, a - i + 1)
    assert gotzmann_decomposition(p) == seq


def test_macaulay_examples():
    assert macaulay_representation(5, 2) == [(3, 2), (2, 1)]
    assert macaulay_growth(5, 2) == 7
    # 4 = C(3,2) + C(1,1) grows to C(4,3) + C(2,2) = 5
    assert macaulay_growth(4, 2) == 5
    assert macaulay_growth(0, 3) == 0


@given(st.integers(1, 4), st.integers(0, 40))
def test_macaulay_growth_matches_lex_oracle(t, a):
    # in k[x0..x4] the lex ideal attains the bound for every a <= N(t)
    if a > comb(4 + t, 4):
        return
    assert macaulay_growth(a, t) == oracles.lex_growth(a, t, 5)


def test_hilbert_function_and_polynomial_examples():
    Y = ideal(3, "x3")
    assert hilbert_function(Y, 3) == 10
    assert str(hilbert_polynomial(Y)) == "(t^2+3*t+2)/2"
    J = ideal(3, "x3^2", "x3*x2", "x2^2", "x3*x1", "x2*x1")
    assert str(hilbert_polynomial(J)) == "t+3"
    with pytest.raises(NotStronglyStable):
        hilbert_polynomial([parse_term("x0", 2)], 2)


@pytest.mark.parametrize("n, p, rprime", CORPUS)
def test_hilbert_polynomial_matches_oracle(n, p, rprime):
    for J in enumerate_borel(n, p, rprime):
        gens = [tuple(g) for g in J.generators]
        reg = max(sum(g) for g in gens)
        xs = [reg + 4, reg + 7]
        assert [hilbert_polynomial(J)(x) for x in xs] == oracles.hilbert_polynomial_values(gens, n, reg, xs)
        for t in range(0, reg + 3):
            assert hilbert_function(J, t) == oracles.hilbert_function(gens, n, t)


def test_context_bookkeeping():
    ctx = context(3, P("2t+2"), 2, 2)
    assert (ctx.N, ctx.ps, ctx.q, ctx.qprime, ctx.qsecond) == (10, 6, 4, 3, 1)
    assert ctx.grassmannian == (6, 10)
    assert (ctx.E_prime, ctx.E) == (210, 125970)
    assert ctx.q_at(3) == 12 and ctx.qsecond_at(3) == 8
    ctx1 = context(3, P("2t+1"), 2, 2)
    assert ctx1.grassmannian == (5, 10) and ctx1.qsecond_at(3) == 9


@pytest.mark.parametrize("args", [(3, "2t+2", 3, 2), (3, "2t+2", 1, 4), (2, "10", 1, 1), (1, "t+1", 1, 1)])
def test_context_rejects(args):
    n, p, rprime, s = args
    with pytest.raises(DomainError):
        context(n, P(p), rprime, s)


def test_polynomial_json_round_trip():
    p = P("(t^2+3t+2)/2")
    assert IntegerPolynomial.from_json(p.to_json()) == p
    assert p.is_integer_valued()
    assert not P("t/2").is_integer_valued()
    assert P("t/2")(3) == Fraction(3, 2)
