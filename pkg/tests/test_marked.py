import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilbreg.borel import BorelIdeal
from hilbreg.errors import ChartMiss, DegreeError, DegreeMismatch, DomainError, HeadMissing, RankDeficient, TailInIdeal
from hilbreg.hilbert import context
from hilbreg.linalg import in_row_space
from hilbreg.marked import (
    MarkedSet,
    Reducer,
    criterion_remainders,
    is_marked_basis,
    make_marked_set,
    marked_scheme_equations,
    marked_set_from_subspace,
    multiplicative_span,
    param_name,
    rank_profile,
    reduce,
    saturation_degree,
    span_rows,
)
from hilbreg.params import ParamPoly
from hilbreg.samples import orbit_marked_basis, perturb_marked_set, random_tail_marked_set
from hilbreg.terms import monomial_basis, parse_term

PLANE = BorelIdeal.parse(2, ["x2", "x1^2"])
SPACE = BorelIdeal.parse(3, ["x3^2", "x3*x2", "x2^2", "x3*x1"])


def T(text, n=2):
    return parse_term(text, n)


def poly_row(poly, n, t):
    basis = monomial_basis(n, t)
    row = [Fraction(0)] * len(basis)
    for u, c in poly.items():
        row[basis.position(u) - 1] += c
    return row


# ----------------------------------------------------------------- ParamPoly


def test_param_poly_arithmetic():
    a, b = ParamPoly.var("a"), ParamPoly.var("b")
    f = (a + b) * (a - b)
    assert f == a * a - b * b
    assert f.degree == 2
    assert f.variables() == ["a", "b"]
    assert f.evaluate({"a": 3, "b": 1}) == 8
    assert (f - f).is_zero()
    assert (a * Fraction(1, 2) + 1).evaluate({"a": 4}) == 3


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
def test_param_poly_evaluation_is_a_ring_map(x, y, k):
    a, b = ParamPoly.var("a"), ParamPoly.var("b")
    f = a * a * k + b - 3
    g = a * b + 2
    vals = {"a": x, "b": y}
    assert (f * g).evaluate(vals) == f.evaluate(vals) * g.evaluate(vals)
    assert (f + g).evaluate(vals) == f.evaluate(vals) + g.evaluate(vals)


# ------------------------------------------------------------- construction


def test_make_marked_set_validation():
    with pytest.raises(TailInIdeal):
        make_marked_set(PLANE, 2, {T("x2^2"): {T("x2*x1"): 1}})
    with pytest.raises(HeadMissing):
        make_marked_set(PLANE, 2, {T("x0^2"): {}})
    with pytest.raises(DegreeMismatch):
        make_marked_set(PLANE, 2, {T("x2^2"): {T("x0"): 1}})
    with pytest.raises(DegreeError):
        make_marked_set(BorelIdeal.parse(2, ["x2^2", "x2*x1", "x1^2"]), 1)


def test_marked_set_shapes():
    F = make_marked_set(PLANE, 2, parametric=True)
    assert [str(h) for h in F.heads] == ["x2^2", "x2*x1", "x1^2", "x2*x0"]
    # two standard terms x1*x0, x0^2 per head
    assert len(F.parameters()) == 8


def test_multiplicative_span_heads_cover_ideal_once():
    F = make_marked_set(SPACE, 2)
    for t in range(2, 5):
        heads = [g.head for g in multiplicative_span(F, t)]
        assert sorted(heads) == sorted(SPACE.degree_part(t))
        assert len(set(heads)) == len(heads)


def test_json_round_trip():
    F = random_tail_marked_set(PLANE, 2, random.Random(3))
    assert MarkedSet.from_json(F.to_json()) == F


# ---------------------------------------------------------------- reduction


@given(st.integers(0, 10**6), st.integers(3, 4))
def test_reduce_is_a_projection_onto_standard_terms(seed, t):
    rng = random.Random(seed)
    F = random_tail_marked_set(SPACE, 2, rng)
    basis = monomial_basis(3, t)
    f = {u: Fraction(rng.randint(-3, 3)) for u in basis.terms if rng.random() < 0.4}
    red = Reducer(F, t)
    nf = reduce(f, F, red)
    assert all(not SPACE.contains(u) for u in nf)
    assert reduce(nf, F, red) == nf
    # f - NF(f) lies in the span of F^(t)
    diff = dict(f)
    for u, c in nf.items():
        diff[u] = diff.get(u, 0) - c
    rows = []
    for g in multiplicative_span(F, t):
        rows.append(poly_row(g.as_poly(), 3, t))
    assert in_row_space(poly_row(diff, 3, t), rows)


def test_reduce_rejects_inhomogeneous():
    F = make_marked_set(PLANE, 2)
    with pytest.raises(DegreeMismatch):
        reduce({T("x2^3"): 1, T("x0^2"): 1}, F)


# ------------------------------------------------------------ basis criterion


def test_monomial_and_orbit_sets_are_bases():
    assert is_marked_basis(make_marked_set(PLANE, 2))
    rng = random.Random(0)
    for _ in range(5):
        F = orbit_marked_basis(SPACE, 2, rng)
        assert is_marked_basis(F)
        ctx = context(3, "2t+2", 2, 2)
        assert all(rk == q for _, rk, q in rank_profile(F, 4, ctx))


def test_perturbed_orbit_set_fails():
    rng = random.Random(1)
    F = perturb_marked_set(orbit_marked_basis(PLANE, 2, rng), rng)
    ctx = context(2, "2", 2, 2)
    assert is_marked_basis(orbit_marked_basis(PLANE, 2, rng))
    assert not is_marked_basis(F)
    assert any(rk != q for _, rk, q in rank_profile(F, 5, ctx))


def test_rank_profile_floor():
    F = random_tail_marked_set(SPACE, 2, random.Random(2))
    for t, rk in rank_profile(F, 4):
        assert rk >= len(SPACE.degree_part(t))
        assert rk <= len(span_rows(F, t))


def test_parametric_equations_small_case():
    eqs = marked_scheme_equations(PLANE, 2)
    assert eqs
    assert max(e.degree for e in eqs) == 2
    assert {v for e in eqs for v in e.variables()} <= set(make_marked_set(PLANE, 2, parametric=True).parameters())


@given(st.integers(0, 10**6))
def test_parametric_and_numeric_criteria_commute(seed):
    rng = random.Random(seed)
    P = make_marked_set(PLANE, 2, parametric=True)
    values = {name: Fraction(rng.randint(-3, 3)) for name in P.parameters()}
    F = P.evaluate(values)
    sym = {(h, i): {u: c.evaluate(values) for u, c in nf.items()} for h, i, nf in criterion_remainders(P)}
    num = {(h, i): nf for h, i, nf in criterion_remainders(F)}
    for key in sym:
        assert {u: c for u, c in sym[key].items() if c} == num[key]
    eqs = marked_scheme_equations(PLANE, 2)
    assert is_marked_basis(F) == all(e.evaluate(values) == 0 for e in eqs)


def test_orbit_points_satisfy_parametric_equations():
    rng = random.Random(5)
    eqs = marked_scheme_equations(PLANE, 2)
    for _ in range(5):
        F = orbit_marked_basis(PLANE, 2, rng)
        values = {}
        for f in F.polys:
            for g in PLANE.standard_part(2):
                values[param_name(f.head, g)] = f.tail_map().get(g, Fraction(0))
        assert all(e.evaluate(values) == 0 for e in eqs)


def test_is_marked_basis_needs_numbers():
    with pytest.raises(DomainError):
        is_marked_basis(make_marked_set(PLANE, 2, parametric=True))


# ------------------------------------------------------------------ charts


def test_subspace_round_trip():
    F = random_tail_marked_set(SPACE, 2, random.Random(4))
    G = marked_set_from_subspace(F.matrix(), SPACE, 2)
    assert G == F


def test_subspace_chart_errors():
    basis = monomial_basis(2, 2)
    rows = []
    for u in ["x1*x0", "x0^2", "x2*x0", "x2^2"]:
        row = [0] * len(basis)
        row[basis.position(T(u)) - 1] = 1
        rows.append(row)
    with pytest.raises(ChartMiss):
        marked_set_from_subspace(rows, PLANE, 2)
    with pytest.raises(RankDeficient):
        marked_set_from_subspace([rows[0]] * 4, PLANE, 2)
    with pytest.raises(DomainError):
        marked_set_from_subspace(rows[:3], PLANE, 2)


def test_saturation_degree_of_truncation():
    # the degree-1 generator x2 is missing from the truncation
    assert saturation_degree(make_marked_set(PLANE, 2)) == 2
