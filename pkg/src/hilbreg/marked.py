"""Marked polynomials and marked sets over a strongly stable ideal.

A marked polynomial is ``f = head - sum c[gamma] * gamma`` with every tail
term outside J.  Coefficients are Fractions (numeric mode) or ParamPoly
(parametric mode); all arithmetic below is written for either.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .borel import BorelIdeal, regularity, truncation
from .errors import (
    ChartMiss,
    DegreeError,
    DegreeMismatch,
    DomainError,
    HeadMissing,
    RankDeficient,
    TailInIdeal,
)
from .linalg import inverse, matmul, rank
from .params import ParamPoly
from .terms import Term, format_term, min_var, monomial_basis, parse_term


def _is_zero(c):
    return not c


@dataclass(frozen=True)
class MarkedPolynomial:
    head: Term
    tail: tuple  # ((gamma, c), ...) sorted by gamma descending

    @classmethod
    def make(cls, head, tail):
        items = [(Term(g), c) for g, c in dict(tail).items() if not _is_zero(c)]
        items.sort(key=lambda gc: Term.sort_key(gc[0]), reverse=True)
        return cls(Term(head), tuple(items))

    @property
    def degree(self):
        return self.head.degree

    def tail_map(self):
        return dict(self.tail)

    def as_poly(self):
        """Full polynomial as {term: coefficient} with head coefficient 1."""
        poly = {self.head: Fraction(1)}
        for g, c in self.tail:
            poly[g] = -c
        return poly

    def support(self):
        return [self.head] + [g for g, _ in self.tail]

    def times_term(self, eta):
        return MarkedPolynomial(self.head * eta, tuple((g * eta, c) for g, c in self.tail))

    def to_json(self):
        return {"head": format_term(self.head), "tail": {format_term(g): _coeff_json(c) for g, c in self.tail}}


def _coeff_json(c):
    if isinstance(c, ParamPoly):
        return str(c)
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def param_name(head, gamma):
    return f"c[{format_term(head)}][{format_term(gamma)}]"


@dataclass(frozen=True)
class MarkedSet:
    """Marked set on the degree-s truncation of J; ``polys`` follows truncation(J, s)."""

    J: BorelIdeal
    s: int
    polys: tuple
    parametric: bool = False

    @property
    def n(self):
        return self.J.n

    @property
    def heads(self):
        return [f.head for f in self.polys]

    def by_head(self):
        return {f.head: f for f in self.polys}

    def parameters(self):
        if not self.parametric:
            return []
        names = set()
        for f in self.polys:
            for _, c in f.tail:
                names.update(c.variables())
        return sorted(names)

    def evaluate(self, values):
        """Numeric marked set obtained by substituting rationals for the parameters."""
        if not self.parametric:
            return self
        polys = tuple(MarkedPolynomial.make(f.head, {g: c.evaluate(values) for g, c in f.tail}) for f in self.polys)
        return MarkedSet(self.J, self.s, polys, parametric=False)

    def matrix(self):
        """Rows of the polynomials over monomial_basis(n, s)."""
        basis = monomial_basis(self.n, self.s)
        rows = []
        for f in self.polys:
            row = [Fraction(0)] * len(basis)
            for u, c in f.as_poly().items():
                row[basis.position(u) - 1] = c
            rows.append(row)
        return rows

    def to_json(self):
        return {"J": self.J.to_json(), "s": self.s, "polys": [f.to_json() for f in self.polys]}

    @classmethod
    def from_json(cls, data):
        J = BorelIdeal.from_json(data["J"])
        s = data["s"]
        tails = {}
        for entry in data["polys"]:
            head = parse_term(entry["head"], J.n)
            tails[head] = {parse_term(g, J.n): Fraction(c) for g, c in entry.get("tail", {}).items()}
        return make_marked_set(J, s, tails)


def make_marked_set(J, s, tails=None, parametric=False):
    """Validated marked set on truncation(J, s).

    ``tails`` maps heads to {gamma: c}; missing heads get a zero tail.  In
    parametric mode every admissible c[alpha][gamma] becomes a fresh
    parameter and ``tails`` is ignored.
    """
    if s < regularity(J):
        raise DegreeError(f"s={s} below regularity {regularity(J)}")
    heads = truncation(J, s)
    standard = J.standard_part(s)
    tails = dict(tails or {})
    polys = []
    if parametric:
        for h in heads:
            polys.append(MarkedPolynomial.make(h, {g: ParamPoly.var(param_name(h, g)) for g in standard}))
        return MarkedSet(J, s, tuple(polys), parametric=True)
    for h in tails:
        h = Term(h)
        if h.degree != s:
            raise DegreeMismatch(f"head {h} has degree {h.degree}, expected {s}")
        if h not in heads:
            raise HeadMissing(f"{h} is not a degree-{s} term of {J}")
    for h in heads:
        tail = {}
        for g, c in tails.get(h, {}).items():
            g = Term(g)
            if g.degree != s:
                raise DegreeMismatch(f"tail term {g} of {h} has degree {g.degree}, expected {s}")
            if J.contains(g):
                raise TailInIdeal(f"tail term {g} of {h} lies in J")
            if g == h:
                raise TailInIdeal(f"head {h} repeated in its own tail")
            tail[g] = Fraction(c)
        polys.append(MarkedPolynomial.make(h, tail))
    return MarkedSet(J, s, tuple(polys))


def _multiplier_terms(n, max_index, degree):
    """Terms of the given degree in x_0..x_{max_index}."""
    return [Term._fast(tuple(u[: max_index + 1]) + (0,) * (n - max_index)) for u in monomial_basis(max_index, degree)]


def multiplicative_span(F, t):
    """F^(t) = {x^eta f_alpha : deg t, max(eta) <= min(alpha)}, one element per term of J_t."""
    if t < F.s:
        raise DegreeError(f"t={t} below the marked set degree {F.s}")
    out = []
    for f in F.polys:
        m = min_var(f.head)
        for eta in _multiplier_terms(F.n, m, t - F.s):
            out.append(f.times_term(eta))
    out.sort(key=lambda g: Term.sort_key(g.head), reverse=True)
    return out


class Reducer:
    """Normal forms modulo F^(t): memoized rewrite of every term of J_t.

    Each term of J_t heads exactly one element of F^(t); its normal form is
    the normal form of that element's tail.  The dependency graph is acyclic
    (the rewriting is Noetherian); a cycle means a broken invariant.
    """

    def __init__(self, F, t):
        self.F = F
        self.t = t
        self.rules = {g.head: g.tail for g in multiplicative_span(F, t)}
        support = max((len(g) for g in self.rules.values()), default=0) + 1
        self.cap = max(1, len(self.rules)) * support * 4
        self._nf = {}
        self.steps = 0

    def in_ideal(self, u):
        return u in self.rules

    def term_nf(self, u):
        """Normal form of a single term, as {term: coeff} supported outside J."""
        if u not in self.rules:
            return {u: Fraction(1)}
        if u in self._nf:
            return self._nf[u]
        # iterative post-order walk over the rewrite graph
        stack = [(u, False)]
        on_path = set()
        while stack:
            v, ready = stack.pop()
            if v in self._nf:
                continue
            if ready:
                acc = {}
                for g, c in self.rules[v]:
                    sub = self._nf[g] if g in self.rules else {g: Fraction(1)}
                    for w, d in sub.items():
                        val = acc.get(w, 0) + c * d
                        if _is_zero(val):
                            acc.pop(w, None)
                        else:
                            acc[w] = val
                self._nf[v] = acc
                on_path.discard(v)
                self.steps += 1
                if self.steps > self.cap:
                    raise RuntimeError("reduction exceeded its iteration cap")
                continue
            if v in on_path:
                raise RuntimeError(f"cyclic rewriting at {v}")
            on_path.add(v)
            stack.append((v, True))
            for g, _ in sorted(self.rules[v], key=lambda gc: Term.sort_key(gc[0]), reverse=True):
                if g in self.rules and g not in self._nf:
                    if g in on_path:
                        raise RuntimeError(f"cyclic rewriting at {g}")
                    stack.append((g, False))
        return self._nf[u]

    def reduce(self, poly):
        out = {}
        for u, c in sorted(poly.items(), key=lambda uc: Term.sort_key(uc[0]), reverse=True):
            if _is_zero(c):
                continue
            if sum(u) != self.t:
                raise DegreeMismatch(f"term {u} is not of degree {self.t}")
            for w, d in self.term_nf(u).items():
                val = out.get(w, 0) + c * d
                if _is_zero(val):
                    out.pop(w, None)
                else:
                    out[w] = val
        return out


def reduce(f, F, reducer=None):
    """Normal form of the homogeneous polynomial ``f`` ({term: coeff}) modulo F^(deg f)."""
    f = {Term(u): c for u, c in dict(f).items() if not _is_zero(c)}
    if not f:
        return {}
    degrees = {sum(u) for u in f}
    if len(degrees) != 1:
        raise DegreeMismatch("reduce needs a homogeneous polynomial")
    t = degrees.pop()
    if reducer is None or reducer.t != t:
        reducer = Reducer(F, t)
    return reducer.reduce(f)


def _times_var(poly, i):
    return {u.times_var(i): c for u, c in poly.items()}


def criterion_remainders(F):
    """Yield (head, i, NF(x_i f)) for every f in F and i > min_var(head)."""
    red = Reducer(F, F.s + 1)
    for f in F.polys:
        poly = f.as_poly()
        for i in range(min_var(f.head) + 1, F.n + 1):
            yield f.head, i, red.reduce(_times_var(poly, i))


def is_marked_basis(F):
    if F.parametric:
        raise DomainError("is_marked_basis needs rational coefficients")
    return all(not nf for _, _, nf in criterion_remainders(F))


def span_rows(F, t):
    """All x^eta f_alpha of degree t as rows over monomial_basis(n, t)."""
    basis = monomial_basis(F.n, t)
    rows = []
    for f in F.polys:
        poly = f.as_poly()
        for eta in monomial_basis(F.n, t - F.s):
            row = [0] * len(basis)
            for u, c in poly.items():
                row[basis.position(u * eta) - 1] = c
            rows.append(row)
    return rows


def rank_profile(F, t_max, ctx=None):
    """[(t, rk I_t)] for s <= t <= t_max; with ``ctx`` also [(t, rk I_t, q(t))]."""
    if F.parametric:
        raise DomainError("rank_profile needs rational coefficients")
    out = []
    for t in range(F.s, t_max + 1):
        rk = rank(span_rows(F, t))
        floor = len(F.J.degree_part(t))
        assert rk >= floor, f"rank {rk} of I_{t} below rank {floor} of J_{t}"
        out.append((t, rk, ctx.q_at(t)) if ctx is not None else (t, rk))
    return out


def rank_matches(F, t_max, ctx):
    return all(rk == q for _, rk, q in rank_profile(F, t_max, ctx))


def marked_scheme_equations(J, s):
    """Coefficients of NF(x_i f_alpha) on 𝒩(J)_{s+1}, parametric; sorted, duplicates removed."""
    F = make_marked_set(J, s, parametric=True)
    eqs = {}
    for _, _, nf in criterion_remainders(F):
        for c in nf.values():
            if not c.is_zero():
                eqs.setdefault(str(c), c)
    return sorted(eqs.values(), key=lambda c: (c.degree, str(c)))


def marked_set_from_subspace(L, J, s):
    """The unique marked set on truncation(J, s) spanning the row space of L.

    Raises ChartMiss when the minor on the J_s columns is singular.
    """
    basis = monomial_basis(J.n, s)
    heads = truncation(J, s)
    if any(len(row) != len(basis) for row in L):
        raise DomainError(f"rows must have length N(s) = {len(basis)}")
    if len(L) != len(heads):
        raise DomainError(f"expected {len(heads)} rows, got {len(L)}")
    if rank(L) != len(heads):
        raise RankDeficient("subspace does not have rank q(s)")
    cols = [basis.position(h) - 1 for h in heads]
    minor = [[Fraction(row[c]) for c in cols] for row in L]
    try:
        inv = inverse(minor)
    except DomainError as exc:
        raise ChartMiss("the J_s-columns minor is singular") from exc
    reduced = matmul(inv, L)
    standard = J.standard_part(s)
    tails = {}
    for h, row in zip(heads, reduced):
        tails[h] = {g: -row[basis.position(g) - 1] for g in standard}
    return make_marked_set(J, s, tails)


def colon_dimension(F, t, k):
    """dim {f in S_t : x0^k f in I_{t+k}} for a marked basis F."""
    if F.parametric:
        raise DomainError("colon_dimension needs rational coefficients")
    if t + k < F.s:
        return 0
    red = Reducer(F, t + k)
    rows = []
    standard_cols = {}
    shift = Term.var(0, F.n)
    for u in monomial_basis(F.n, t):
        w = u
        for _ in range(k):
            w = w * shift
        nf = red.reduce({w: Fraction(1)})
        rows.append(nf)
        for g in nf:
            standard_cols.setdefault(g, len(standard_cols))
    mat = [[0] * len(standard_cols) for _ in rows]
    for r, nf in enumerate(rows):
        for g, c in nf.items():
            mat[r][standard_cols[g]] = c
    return len(rows) - (rank(mat) if standard_cols else 0)


def ideal_dimension(F, t):
    """rk I_t (0 below s)."""
    if t < F.s:
        return 0
    return rank(span_rows(F, t))


def saturation_degree(F, t_max=None, k=None):
    """Least t0 with (I^sat)_t = I_t for all t0 <= t <= t_max, I^sat = I : x0^infinity.

    Only meaningful for marked bases.  ``k`` is the colon exponent (default s+2).
    """
    if t_max is None:
        t_max = F.s + 1
    if k is None:
        k = F.s + 2
    t0 = t_max + 1
    for t in range(t_max, -1, -1):
        if colon_dimension(F, t, k) != ideal_dimension(F, t):
            break
        t0 = t
    return t0
