"""Plücker coordinates, the exterior elements delta^(m)_K and the global equations.

Positions are 1-based indices into ``monomial_basis(n, s)``.  Exterior
elements store their wedge slots as bitmasks (bit j-1 for position j) and
their coefficients either as Plücker polynomials (symbolic route) or as
integers obtained from integer-scaled coordinates (numeric route).  The two
routes share the enumeration of equations but nothing else, so the tests can
play them against each other.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm

from .borel import BorelIdeal, MultiIndex, enumerate_borel, ideal_from_multiindex, multiindex_of
from .errors import DomainError, RankDeficient, SizeGuardExceeded
from .linalg import det, rank
from .terms import Term, monomial_basis

MAX_B1 = 10**4
MAX_ARITY = 12
MAX_EXPANSION_TERMS = 2 * 10**7


# ---------------------------------------------------------------- signs, masks


def shuffle_sign(first, second):
    """Sign of the permutation sorting the concatenation (first, second)."""
    inversions = sum(1 for a in first for b in second if a > b)
    return -1 if inversions % 2 else 1


def mask_of(positions):
    m = 0
    for j in positions:
        m |= 1 << (j - 1)
    return m


def positions_of(mask):
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def merge_sign(ma, mb):
    """Sign of e_A ^ e_B relative to e_{A u B} for disjoint sorted slot sets."""
    inversions = 0
    b = mb
    while b:
        low = b & -b
        inversions += (ma >> low.bit_length()).bit_count()
        b ^= low
    return -1 if inversions & 1 else 1


# ----------------------------------------------------------- Grassmann points


@dataclass(frozen=True)
class GrassmannPoint:
    """A q(s)-dimensional subspace of S_s given by a full-rank row matrix."""

    n: int
    s: int
    rows: tuple

    def __post_init__(self):
        N = comb(self.n + self.s, self.n)
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.rows)
        if any(len(r) != N for r in rows):
            raise DomainError(f"rows must have length N(s) = {N}")
        if rank([list(r) for r in rows]) != len(rows):
            raise RankDeficient("basis matrix is not of full rank")
        object.__setattr__(self, "rows", rows)

    @property
    def N(self):
        return comb(self.n + self.s, self.n)

    @property
    def dim(self):
        return len(self.rows)

    def matrix(self):
        return [list(r) for r in self.rows]

    def to_json(self):
        return {"n": self.n, "s": self.s, "rows": [[_frac_str(x) for x in r] for r in self.rows]}

    @classmethod
    def from_json(cls, data):
        return cls(data["n"], data["s"], tuple(tuple(Fraction(x) for x in r) for r in data["rows"]))


def _frac_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def pluecker_coordinates(L):
    """{I: Delta_I(L)} over all p-subsets I; Delta_I = sign(I^c, I) * det(L[:, I^c])."""
    N, q = L.N, L.dim
    p = N - q
    mat = L.matrix()
    coords = {}
    everything = range(1, N + 1)
    for I in itertools.combinations(everything, p):
        own = set(I)
        C = tuple(j for j in everything if j not in own)
        minor = [[row[c - 1] for c in C] for row in mat]
        coords[I] = shuffle_sign(C, I) * det(minor)
    return coords


def integer_coordinates(coords):
    """Clear denominators (Plücker coordinates are projective)."""
    den = 1
    for v in coords.values():
        den = lcm(den, Fraction(v).denominator)
    return {k: int(Fraction(v) * den) for k, v in coords.items()}


# ------------------------------------------------------------ Plücker polynomials


class PlueckerPolynomial:
    """Rational polynomial in the variables D[I]; a monomial is a sorted tuple of index tuples."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for mono, c in (terms or {}).items():
            mono = tuple(sorted(tuple(I) for I in mono))
            v = out.get(mono, 0) + Fraction(c)
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        self.terms = out

    @classmethod
    def variable(cls, I):
        return cls({(tuple(I),): 1})

    @classmethod
    def constant(cls, c):
        return cls({(): c})

    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        return max((len(m) for m in self.terms), default=-1)

    def is_homogeneous(self):
        return len({len(m) for m in self.terms}) <= 1

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        p = PlueckerPolynomial()
        p.terms = out
        return p

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        p = PlueckerPolynomial()
        p.terms = {m: v * c for m, v in self.terms.items()} if c else {}
        return p

    def __mul__(self, other):
        if not isinstance(other, PlueckerPolynomial):
            return self.scale(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        p = PlueckerPolynomial()
        p.terms = out
        return p

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, PlueckerPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, coords):
        total = Fraction(0) if any(isinstance(v, Fraction) for v in coords.values()) else 0
        for m, c in self.terms.items():
            v = c
            for I in m:
                v *= coords[I]
            total += v
        return total

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join("D[" + ",".join(map(str, I)) + "]" for I in m)
            coeff = abs(c)
            body = mono if (coeff == 1 and mono) else (f"{_frac_str(coeff)}*{mono}" if mono else _frac_str(coeff))
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    __repr__ = __str__

    def to_json(self):
        return [{"coeff": _frac_str(c), "vars": [list(I) for I in m]} for m, c in self.sorted_terms()]


# ------------------------------------------------------------ exterior elements


@lru_cache(maxsize=None)
def _subsets(N, size):
    return tuple(itertools.combinations(range(1, N + 1), size))


class VariableIndex:
    """Bijection between p-subsets of {1..N} and small integers (variable ids)."""

    def __init__(self, N, p):
        self.N, self.p = N, p
        self.subsets = _subsets(N, p)
        self.ids = {I: k for k, I in enumerate(self.subsets)}


class ExteriorElement:
    """Sum of coefficient * e_{h_1} ^ ... ^ e_{h_m} over one degree-t monomial basis.

    ``terms`` maps slot bitmasks to coefficients.  Symbolic coefficients are
    dicts {sorted tuple of variable ids: int}; numeric coefficients are ints.
    """

    __slots__ = ("n", "t", "grade", "terms", "symbolic", "index")

    def __init__(self, n, t, grade, terms, symbolic, index=None):
        self.n, self.t, self.grade = n, t, grade
        self.terms = terms
        self.symbolic = symbolic
        self.index = index

    @classmethod
    def scalar_one(cls, n, t, symbolic, index=None):
        return cls(n, t, 0, {0: ({(): 1} if symbolic else 1)}, symbolic, index)

    def is_zero(self):
        return not self.terms

    def slots(self):
        """{slot tuple: coefficient}; symbolic coefficients as PlueckerPolynomials."""
        out = {}
        for m, c in self.terms.items():
            if self.symbolic:
                out[positions_of(m)] = self._to_poly(c)
            else:
                out[positions_of(m)] = c
        return out

    def _to_poly(self, c):
        subsets = self.index.subsets
        p = PlueckerPolynomial()
        p.terms = {tuple(subsets[k] for k in mono): Fraction(v) for mono, v in c.items()}
        return p

    def evaluate(self, coords):
        """Numeric value at Plücker coordinates; returns {slot tuple: value}."""
        if not self.symbolic:
            raise DomainError("element is already numeric")
        values = [coords[I] for I in self.index.subsets]
        out = {}
        for m, c in self.terms.items():
            total = 0
            for mono, v in c.items():
                for k in mono:
                    v = v * values[k]
                total += v
            if total:
                out[positions_of(m)] = total
        return out

    def wedge(self, other):
        if (self.n, self.t, self.symbolic) != (other.n, other.t, other.symbolic):
            raise DomainError("wedge of incompatible exterior elements")
        return ExteriorElement(self.n, self.t, self.grade + other.grade,
                               _wedge_terms(self.terms, other.terms, self.symbolic),
                               self.symbolic, self.index or other.index)

    def __add__(self, other):
        if self.grade != other.grade:
            raise DomainError("sum of exterior elements of different grades")
        out = dict(self.terms)
        for m, c in other.terms.items():
            if m in out:
                v = _coeff_add(out[m], c, self.symbolic)
                if _coeff_zero(v):
                    del out[m]
                else:
                    out[m] = v
            else:
                out[m] = c
        return ExteriorElement(self.n, self.t, self.grade, out, self.symbolic, self.index)

    def scale(self, k):
        if k == 1:
            return self
        out = {m: _coeff_scale(c, k, self.symbolic) for m, c in self.terms.items()}
        return ExteriorElement(self.n, self.t, self.grade, out, self.symbolic, self.index)

    def size(self):
        if self.symbolic:
            return sum(len(c) for c in self.terms.values())
        return len(self.terms)


def _coeff_add(a, b, symbolic):
    if not symbolic:
        return a + b
    out = dict(a)
    for mono, v in b.items():
        w = out.get(mono, 0) + v
        if w:
            out[mono] = w
        else:
            out.pop(mono, None)
    return out


def _coeff_zero(c):
    return not c


def _coeff_scale(c, k, symbolic):
    if not symbolic:
        return c * k
    return {mono: v * k for mono, v in c.items()}


def _wedge_terms(A, B, symbolic):
    out = {}
    for ma, ca in A.items():
        for mb, cb in B.items():
            if ma & mb:
                continue
            sign = merge_sign(ma, mb)
            m = ma | mb
            if symbolic:
                acc = out.get(m)
                if acc is None:
                    acc = out[m] = {}
                for xa, va in ca.items():
                    for xb, vb in cb.items():
                        x = tuple(sorted(xa + xb))
                        v = acc.get(x, 0) + sign * va * vb
                        if v:
                            acc[x] = v
                        else:
                            del acc[x]
            else:
                out[m] = out.get(m, 0) + sign * ca * cb
    return {m: c for m, c in out.items() if c}


def _delta_terms(K, m, coeff_of):
    """Slot terms of delta^(m)_K with coefficient eps * coeff_of(K \\ H)."""
    K = tuple(sorted(K))
    out = {}
    for H in itertools.combinations(K, m):
        own = set(H)
        rest = tuple(k for k in K if k not in own)
        out[mask_of(H)] = (shuffle_sign(rest, H), rest)
    return {mask: (sign, coeff_of(rest)) for mask, (sign, rest) in out.items()}


def delta(K, m, n, s, index=None):
    """Symbolic delta^(m)_K = sum_H eps(K\\H, H) D[K\\H] e_H over |H| = m."""
    N = comb(n + s, n)
    K = tuple(sorted(K))
    p = len(K) - m
    if m < 1 or p < 0 or len(set(K)) != len(K) or (K and (K[0] < 1 or K[-1] > N)):
        raise DomainError(f"delta needs 1 <= m <= |K| and K inside [1, {N}]")
    if index is None:
        index = VariableIndex(N, p)
    elif index.p != p:
        raise DomainError(f"|K| - m = {p} does not match the variable size {index.p}")
    terms = {mask: {(index.ids[rest],): sign} for mask, (sign, rest) in
             _delta_terms(K, m, lambda rest: rest).items()}
    return ExteriorElement(n, s, m, terms, True, index)


def numeric_delta(K, m, n, s, coords):
    """delta^(m)_K evaluated at integer coordinates (numeric route)."""
    K = tuple(sorted(K))
    terms = {}
    for mask, (sign, value) in _delta_terms(K, m, lambda rest: coords[rest]).items():
        if value:
            terms[mask] = sign * value
    return ExteriorElement(n, s, m, terms, False)


@lru_cache(maxsize=None)
def _shift_table(n, s, i):
    """Position map monomial_basis(n, s) -> monomial_basis(n, s+1) for x_i * ."""
    src = monomial_basis(n, s)
    dst = monomial_basis(n, s + 1)
    return tuple(dst.position(u.times_var(i)) for u in src)


def _shift_mask(mask, table):
    out = 0
    j = 0
    while mask:
        if mask & 1:
            out |= 1 << (table[j] - 1)
        mask >>= 1
        j += 1
    return out


def variable_multiply(i, e):
    """x_i * e: every slot e_u becomes e_{x_i u}; multiplication preserves the slot order."""
    if not 0 <= i <= e.n:
        raise DomainError(f"x{i} is not a variable of the ring")
    table = _shift_table(e.n, e.t, i)
    terms = {_shift_mask(m, table): c for m, c in e.terms.items()}
    return ExteriorElement(e.n, e.t + 1, e.grade, terms, e.symbolic, e.index)


def wedge_power_rows(L, m):
    """Rows of ∧^m L: the m x m minors of L's basis matrix, one row per m-subset of rows."""
    mat = L.matrix()
    N = L.N
    cols = list(itertools.combinations(range(N), m))
    rows = []
    for R in itertools.combinations(range(len(mat)), m):
        rows.append([det([[mat[r][c] for c in C] for r in R]) for C in cols])
    return rows, [tuple(c + 1 for c in C) for C in cols]


# ---------------------------------------------------------------- generators


@dataclass(frozen=True)
class Generator:
    """sum of sign * x_var * delta^(1)_K over ``parts``; ``kind`` in {G1, G2, G3}."""

    kind: str
    parts: tuple  # ((sign, var, K), ...)

    def label(self):
        return {"kind": self.kind, "parts": [[sgn, var, list(K)] for sgn, var, K in self.parts]}


def pure_positions(n, d, s):
    """Positions of the degree-s terms in k[x_{d+1}, ..., x_n]."""
    return frozenset(j for j, u in enumerate(monomial_basis(n, s), start=1) if not any(u[: d + 1]))


def generator_families(ctx):
    """B1 (index sets), and the generator lists G1, G2, G3 of the degree-(s+1) ideal parts."""
    n, d, s = ctx.n, ctx.d, ctx.s
    N, p = ctx.N, ctx.ps
    B1 = _subsets(N, p + 1)
    pure = pure_positions(n, d, s)
    impure = [j for j in range(1, N + 1) if j not in pure]
    G1 = [Generator("G1", ((1, h, K),)) for h in range(d + 1) for K in B1]
    G2 = [Generator("G2", ((1, h, K),)) for h in range(d + 1, n + 1)
          for K in itertools.combinations(impure, p + 1)]
    basis = monomial_basis(n, s)
    G3 = []
    for i in range(d + 1, n + 1):
        for ibar in range(i + 1, n + 1):
            for j in sorted(pure):
                u = basis[j]
                if not u[ibar]:
                    continue
                jbar = basis.position(u.times_var(i) / _var(n, ibar))
                for rest in itertools.combinations(impure, p):
                    K = tuple(sorted(rest + (j,)))
                    Kbar = tuple(sorted(rest + (jbar,)))
                    # signs of e_j in delta_K and of e_jbar in delta_Kbar
                    eps = shuffle_sign(rest, (j,))
                    eps_bar = shuffle_sign(rest, (jbar,))
                    G3.append(Generator("G3", ((1, i, K), (-eps * eps_bar, ibar, Kbar))))
    return {"B1": B1, "G1": G1, "G2": G2, "G3": G3}


def _var(n, i):
    return Term.var(i, n)


# ---------------------------------------------------------------- equations


def compositions(total, parts, cap):
    """Tuples (m_0, ..., m_{parts-1}) with 0 <= m_i <= cap summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, cap), -1, -1):
        for rest in compositions(total - first, parts - 1, cap):
            yield (first,) + rest


@dataclass(frozen=True)
class WedgeFactor:
    """x_var * delta^(m)_K."""

    var: int
    m: int
    K: tuple


@dataclass(frozen=True)
class EquationLabel:
    family: str
    factors: tuple  # of WedgeFactor
    generator: Generator | None
    slots: tuple

    def to_json(self):
        return {
            "factors": [[f.var, f.m, list(f.K)] for f in self.factors],
            "generator": self.generator.label() if self.generator else None,
            "slots": list(self.slots),
        }


@dataclass
class EquationStructure:
    """Counts and Δ-degrees of the three families, without expanding anything."""

    arity_A: int
    arity_BC: int
    compositions_A: list
    compositions_BC: list
    wedges_A: int
    wedges_BC: int
    generators_B: int
    generators_C: int
    degree: dict = field(default_factory=dict)
    estimated_terms: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "arity_A": self.arity_A,
            "arity_BC": self.arity_BC,
            "compositions_A": [list(c) for c in self.compositions_A],
            "compositions_BC": [list(c) for c in self.compositions_BC],
            "wedges_A": self.wedges_A,
            "wedges_BC": self.wedges_BC,
            "generators_B": self.generators_B,
            "generators_C": self.generators_C,
            "degree": self.degree,
            "estimated_terms": self.estimated_terms,
        }


def check_size_guards(ctx):
    b1 = comb(ctx.N, ctx.ps + 1)
    arity = ctx.qsecond_at(ctx.s + 1) + 1
    over = {}
    if b1 > MAX_B1:
        over["C(N(s), p(s)+1)"] = b1
    if arity > MAX_ARITY:
        over["q''(s+1)+1"] = arity
    if over:
        raise SizeGuardExceeded(f"equation generation exceeds desk-scale guards: {over}", over)


class EquationSet:
    """Families A, B, C of the global equations, generated lazily.

    Family A: coefficients of  ∧_{i<=d} x_i delta^(m_i)_{K_i},  sum m_i = q''(s+1)+1.
    Families B and C: coefficients of  (∧_{i<=d} x_i delta^(m_i)_{K_i}) ∧ g  with
    sum m_i = q''(s+1) and g in G2 (B) or G3 (C).  Every K_i ranges over all
    subsets of size p(s)+m_i; m_i = 0 drops the factor.
    """

    def __init__(self, ctx, max_terms=MAX_EXPANSION_TERMS):
        check_size_guards(ctx)
        self.ctx = ctx
        self.max_terms = max_terms
        self.families = generator_families(ctx)
        self.index = VariableIndex(ctx.N, ctx.ps)
        self.structure = self._structure()

    # -- structure

    def _structure(self):
        ctx = self.ctx
        d, cap, N, p = ctx.d, ctx.q, ctx.N, ctx.ps
        arity_a = ctx.qsecond_at(ctx.s + 1) + 1
        arity_bc = arity_a - 1
        comps_a = list(compositions(arity_a, d + 1, cap)) if arity_a >= 0 else []
        comps_bc = list(compositions(arity_bc, d + 1, cap)) if arity_bc >= 0 else []

        def wedges(comps):
            return sum(_prod(comb(N, p + m) for m in c if m) for c in comps)

        def terms_per_wedge(c):
            return _prod(comb(N, p + m) * comb(p + m, m) for m in c if m)

        g2, g3 = self.families["G2"], self.families["G3"]
        w_a, w_bc = wedges(comps_a), wedges(comps_bc)
        per_bc = sum(terms_per_wedge(c) for c in comps_bc)
        est = {
            "A": sum(terms_per_wedge(c) for c in comps_a),
            "B": per_bc * len(g2) * (p + 1),
            "C": per_bc * len(g3) * 2 * (p + 1),
        }
        degree = {}
        if w_a:
            degree["A"] = max(sum(1 for m in c if m) for c in comps_a)
        if w_bc and g2:
            degree["B"] = max(sum(1 for m in c if m) for c in comps_bc) + 1
        if w_bc and g3:
            degree["C"] = max(sum(1 for m in c if m) for c in comps_bc) + 1
        return EquationStructure(arity_a, arity_bc, comps_a, comps_bc, w_a, w_bc, len(g2), len(g3),
                                 degree, est)

    def degree_bound(self):
        return {"A": self.ctx.d + 1, "B": self.ctx.d + 2, "C": self.ctx.d + 2}

    def estimated_terms(self, families=("A", "B", "C")):
        return sum(self.structure.estimated_terms[f] for f in families)

    def within_budget(self, families=("A", "B", "C")):
        return self.estimated_terms(families) <= self.max_terms

    def require_budget(self, families=("A", "B", "C")):
        if not self.within_budget(families):
            est = self.estimated_terms(families)
            raise SizeGuardExceeded(
                f"expanding families {''.join(families)} needs about {est} terms (budget {self.max_terms})",
                {"estimated_terms": est, "budget": self.max_terms},
            )

    # -- shared enumeration

    def _factor_choices(self, comps):
        N, p = self.ctx.N, self.ctx.ps
        for c in comps:
            options = []
            for i, m in enumerate(c):
                if m:
                    options.append([WedgeFactor(i, m, K) for K in _subsets(N, p + m)])
            for factors in itertools.product(*options):
                yield factors

    def _generators(self, family):
        return self.families["G2"] if family == "B" else self.families["G3"]

    # -- symbolic route

    def _sym_factor(self, f, cache):
        key = (f.var, f.m, f.K)
        if key not in cache:
            cache[key] = variable_multiply(f.var, delta(f.K, f.m, self.ctx.n, self.ctx.s, self.index))
        return cache[key]

    def _sym_generator(self, g, cache):
        total = None
        for sign, var, K in g.parts:
            e = self._sym_factor(WedgeFactor(var, 1, K), cache).scale(sign)
            total = e if total is None else total + e
        return total

    def _sym_product(self, factors, cache):
        ctx = self.ctx
        acc = ExteriorElement.scalar_one(ctx.n, ctx.s + 1, True, self.index)
        for f in factors:
            acc = acc.wedge(self._sym_factor(f, cache))
        return acc

    def iter_equations(self, families=("A", "B", "C")):
        """Yield (EquationLabel, PlueckerPolynomial) for every nonzero coefficient."""
        self.require_budget(families)
        cache = {}
        if "A" in families:
            for factors in self._factor_choices(self.structure.compositions_A):
                w = self._sym_product(factors, cache)
                for slots, poly in sorted(w.slots().items()):
                    yield EquationLabel("A", factors, None, slots), poly
        for fam in ("B", "C"):
            if fam not in families:
                continue
            gens = self._generators(fam)
            if not gens:
                continue
            gen_elems = [(g, self._sym_generator(g, cache)) for g in gens]
            for factors in self._factor_choices(self.structure.compositions_BC):
                omega = self._sym_product(factors, cache)
                for g, ge in gen_elems:
                    w = omega.wedge(ge)
                    for slots, poly in sorted(w.slots().items()):
                        yield EquationLabel(fam, factors, g, slots), poly

    def write_json(self, fp, families=("A", "B", "C")):
        """Stream the equations as a JSON array; returns the number written."""
        fp.write("[")
        count = 0
        for label, poly in self.iter_equations(families):
            entry = {"family": label.family, "degree": poly.degree, "label": label.to_json(),
                     "terms": poly.to_json()}
            fp.write(("," if count else "") + "\n" + json.dumps(entry, sort_keys=True))
            count += 1
        fp.write("\n]\n")
        return count

    # -- numeric route

    def violations(self, coords, limit=None, families=("A", "B", "C")):
        """Nonvanishing equations at integer-scaled coordinates: list of (label, value).

        Stops after ``limit`` violations when given.
        """
        self.require_budget(families)
        ctx = self.ctx
        vals = integer_coordinates(coords)
        cache = {}

        def factor(f):
            key = (f.var, f.m, f.K)
            if key not in cache:
                cache[key] = variable_multiply(f.var, numeric_delta(f.K, f.m, ctx.n, ctx.s, vals))
            return cache[key]

        def product(factors):
            acc = ExteriorElement.scalar_one(ctx.n, ctx.s + 1, False)
            for f in factors:
                acc = acc.wedge(factor(f))
                if acc.is_zero():
                    break
            return acc

        found = []
        comps_a = self.structure.compositions_A if "A" in families else []
        for factors in self._factor_choices(comps_a):
            w = product(factors)
            for m, v in sorted(w.terms.items()):
                found.append((EquationLabel("A", factors, None, positions_of(m)), v))
                if limit and len(found) >= limit:
                    return found
        gen_elems = {}
        bc = [fam for fam in ("B", "C") if fam in families]
        for fam in bc:
            gen_elems[fam] = []
            for g in self._generators(fam):
                total = None
                for sign, var, K in g.parts:
                    e = factor(WedgeFactor(var, 1, K)).scale(sign)
                    total = e if total is None else total + e
                gen_elems[fam].append((g, total))
        for factors in self._factor_choices(self.structure.compositions_BC if bc else []):
            omega = product(factors)
            if omega.is_zero():
                continue
            for fam in bc:
                for g, ge in gen_elems[fam]:
                    w = _wedge_single_slots(omega.terms, ge.terms)
                    for m, v in sorted(w.items()):
                        found.append((EquationLabel(fam, factors, g, positions_of(m)), v))
                        if limit and len(found) >= limit:
                            return found
        return found


def _wedge_single_slots(omega, gen):
    """omega ∧ gen for a grade-1 numeric ``gen``; the hot loop of the numeric route."""
    out = {}
    for mb, cb in gen.items():
        shift = mb.bit_length()
        for ma, ca in omega.items():
            if ma & mb:
                continue
            v = ca * cb
            if (ma >> shift).bit_count() & 1:
                v = -v
            key = ma | mb
            out[key] = out.get(key, 0) + v
    return {m: c for m, c in out.items() if c}


def _prod(values):
    out = 1
    for v in values:
        out *= v
    return out


def equations(ctx, max_terms=MAX_EXPANSION_TERMS):
    return EquationSet(ctx, max_terms=max_terms)


# ---------------------------------------------------------------- complement forms


def borel_charts(ctx):
    """Multi-indices of 𝒮^[r',s]_p: the charts of saturated Borel ideals with reg <= r'."""
    return [multiindex_of(J, ctx.s).indices for J in enumerate_borel(ctx.n, ctx.p, ctx.rprime)]


def complement_linear_forms(ctx, group_sample=()):
    """[(g_index, I, linear PlueckerPolynomial)]: Delta_I(g(L)) as a form in Delta(L).

    g_index 0 is the identity; sample element k is g_index k+1.  Cauchy-Binet:
    det((L A)[:, C]) = sum_R det(L[:, R]) det(A[R, C]).
    """
    from .samples import induced_matrix

    charts = borel_charts(ctx)
    N, p = ctx.N, ctx.ps
    q = N - p
    everything = range(1, N + 1)
    forms = [(0, I, PlueckerPolynomial.variable(I)) for I in charts]
    for k, G in enumerate(group_sample, start=1):
        A = induced_matrix(G, ctx.n, ctx.s)
        for I in charts:
            own = set(I)
            C = tuple(j for j in everything if j not in own)
            sign_c = shuffle_sign(C, I)
            terms = {}
            for R in itertools.combinations(everything, q):
                minor = det([[A[r - 1][c - 1] for c in C] for r in R])
                if not minor:
                    continue
                rset = set(R)
                Rc = tuple(j for j in everything if j not in rset)
                terms[(Rc,)] = sign_c * shuffle_sign(R, Rc) * minor
            forms.append((k, I, PlueckerPolynomial(terms)))
    return forms


# ---------------------------------------------------------------- membership


class Verdict:
    MEMBER = "Member"
    IN_COMPLEMENT = "InComplement"
    VIOLATED = "EquationsViolated"


@dataclass
class MembershipReport:
    verdict: str
    chart: tuple | None = None  # (g_index, I)
    violations: list = field(default_factory=list)
    violation_count: int = 0
    route: str = "equations"
    note: str = ""

    def to_json(self):
        return {
            "verdict": self.verdict,
            "chart": None if self.chart is None else {"g_index": self.chart[0], "indices": list(self.chart[1])},
            "violation_count": self.violation_count,
            "violations": [
                {"family": lab.family, "value": str(v), "label": lab.to_json()} for lab, v in self.violations
            ],
            "route": self.route,
            "note": self.note,
        }


def membership_test(L, ctx, group_sample=(), witness_limit=5, max_terms=MAX_EXPANSION_TERMS, exhaustive=False):
    """Member / InComplement / EquationsViolated for the subspace L of S_s.

    The complement forms are evaluated for the identity and every sampled g.
    If none survives, L lies in the sampled part of the complement locus.
    Otherwise the equations are evaluated at g(L) for the first hosting g
    (identity first).  Beyond the size guards the marked-basis criterion on
    that chart decides and the report says so.
    """
    from .samples import transform_subspace

    if (L.n, L.s) != (ctx.n, ctx.s) or L.dim != ctx.q:
        raise DomainError("point does not match the context dimensions")
    charts = borel_charts(ctx)
    elements = [None] + list(group_sample)
    note = f"complement checked on the identity and {len(group_sample)} sampled group elements"
    host = None
    for k, G in enumerate(elements):
        moved = L if G is None else GrassmannPoint(ctx.n, ctx.s, tuple(map(tuple, transform_subspace(L.matrix(), G, ctx.n, ctx.s))))
        coords = pluecker_coordinates(moved)
        for I in charts:
            if coords[I]:
                host = (k, I, moved, coords)
                break
        if host:
            break
    if host is None:
        return MembershipReport(Verdict.IN_COMPLEMENT, note=note)
    k, I, moved, coords = host
    try:
        eqs = EquationSet(ctx, max_terms=max_terms)
        eqs.require_budget()
    except SizeGuardExceeded as exc:
        return _fallback(moved, ctx, (k, I), note + f"; equations skipped ({exc}), marked-basis criterion used")
    found = eqs.violations(coords, limit=None if exhaustive else witness_limit)
    if not found:
        return MembershipReport(Verdict.MEMBER, chart=(k, I), note=note)
    return MembershipReport(Verdict.VIOLATED, chart=(k, I), violations=found[:witness_limit],
                            violation_count=len(found), note=note)


def _fallback(moved, ctx, chart, note):
    from .marked import is_marked_basis, marked_set_from_subspace

    J = ideal_from_multiindex(MultiIndex(ctx.n, ctx.s, chart[1]))
    F = marked_set_from_subspace(moved.matrix(), BorelIdeal(J.n, J.generators), ctx.s)
    if is_marked_basis(F):
        return MembershipReport(Verdict.MEMBER, chart=chart, route="marked-basis", note=note)
    return MembershipReport(Verdict.VIOLATED, chart=chart, violation_count=1, route="marked-basis", note=note)
