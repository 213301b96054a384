"""Strongly stable monomial ideals and the multi-index dictionary.

A multi-index is a set of 1-based positions in ``monomial_basis(n, s)``; the
ideal attached to it is generated by the degree-s terms whose positions lie
outside the set.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DegreeError, DomainError, NotStronglyStable
from .hilbert import IntegerPolynomial, gotzmann_number, parse_polynomial
from .terms import Term, TermList, elevations, min_var, monomial_basis, parse_term


def _minimalize(terms):
    terms = sorted(set(terms), key=lambda u: (sum(u), Term.sort_key(u)))
    kept = []
    for u in terms:
        if not any(g.divides(u) for g in kept):
            kept.append(u)
    # ascending degree, descending DegRevLex inside each degree
    return tuple(sorted(kept, key=lambda u: (sum(u), tuple(u))))


def _in_ideal(u, gens):
    return any(g.divides(u) for g in gens)


def is_strongly_stable(gens, n=None):
    """Closure under elevations; checking the generators is enough."""
    gens = list(gens)
    return all(_in_ideal(e, gens) for g in gens for e in elevations(g))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators (descending DegRevLex within each degree)."""

    n: int
    generators: tuple

    def __post_init__(self):
        gens = _minimalize(Term(g) for g in self.generators)
        if any(len(g) != self.n + 1 for g in gens):
            raise DomainError(f"generators must live in x0..x{self.n}")
        object.__setattr__(self, "generators", gens)

    @property
    def is_borel(self):
        return is_strongly_stable(self.generators)

    def contains(self, u):
        return _in_ideal(u, self.generators)

    def degree_part(self, t):
        return TermList([u for u in monomial_basis(self.n, t) if self.contains(u)])

    def standard_part(self, t):
        """𝒩(J)_t: degree-t terms outside the ideal."""
        return TermList([u for u in monomial_basis(self.n, t) if not self.contains(u)])

    def __str__(self):
        return "(" + ", ".join(map(str, self.generators)) + ")"

    def to_json(self):
        return {"n": self.n, "generators": [str(g) for g in self.generators]}

    @classmethod
    def from_json(cls, data):
        n = data["n"]
        return cls(n, tuple(parse_term(g, n) for g in data["generators"]))

    def sort_key(self):
        return tuple((sum(g), tuple(g)) for g in self.generators)


class BorelIdeal(MonomialIdeal):
    """A strongly stable monomial ideal."""

    def __post_init__(self):
        super().__post_init__()
        if not is_strongly_stable(self.generators):
            raise NotStronglyStable(f"{self} is not strongly stable")

    @classmethod
    def from_json(cls, data):
        n = data["n"]
        return cls(n, tuple(parse_term(g, n) for g in data["generators"]))

    @classmethod
    def parse(cls, n, generators):
        return cls(n, tuple(parse_term(g, n) for g in generators))


def minimal_generators(terms, n=None):
    """Minimal generators of the ideal spanned by ``terms``; must be strongly stable."""
    terms = [Term(u) for u in terms]
    if not terms:
        raise DomainError("empty generating set")
    if n is None:
        n = terms[0].n
    ideal = MonomialIdeal(n, tuple(terms))
    if not ideal.is_borel:
        raise NotStronglyStable(f"{ideal} is not strongly stable")
    return BorelIdeal(n, ideal.generators)


def saturate(J):
    """J^sat for strongly stable J: strip the x0-power from every generator."""
    gens = []
    for g in J.generators:
        e = list(g)
        e[0] = 0
        gens.append(Term(e))
    return BorelIdeal(J.n, tuple(gens))


def regularity(J):
    return max((sum(g) for g in J.generators), default=0)


def truncation(J, s):
    """Basis of J_{>=s} in degree s (valid for s >= reg J)."""
    if s < regularity(J):
        raise DegreeError(f"truncation degree {s} below regularity {regularity(J)}")
    return J.degree_part(s)


@dataclass(frozen=True)
class MultiIndex:
    """Strictly increasing 1-based positions in monomial_basis(n, s)."""

    n: int
    s: int
    indices: tuple

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        N = comb(self.n + self.s, self.n)
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise DomainError("multi-index positions must be strictly increasing")
        if idx and (idx[0] < 1 or idx[-1] > N):
            raise DomainError(f"multi-index positions must lie in [1, {N}]")
        object.__setattr__(self, "indices", idx)

    @property
    def N(self):
        return comb(self.n + self.s, self.n)

    def complement(self):
        own = set(self.indices)
        return tuple(j for j in range(1, self.N + 1) if j not in own)

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def to_json(self):
        return {"n": self.n, "s": self.s, "indices": list(self.indices)}

    @classmethod
    def from_json(cls, data):
        return cls(data["n"], data["s"], tuple(data["indices"]))


def ideal_from_multiindex(I):
    """J(𝓘): generated by the degree-s terms at positions outside 𝓘.

    Returns a :class:`MonomialIdeal`; use ``.is_borel`` for the stability flag.
    """
    basis = monomial_basis(I.n, I.s)
    gens = tuple(basis[j] for j in I.complement())
    if not gens:
        return MonomialIdeal(I.n, ())
    return MonomialIdeal(I.n, gens)


def multiindex_of(J, s):
    """Positions of 𝒩(J)_s in monomial_basis(n, s)."""
    if s < regularity(J):
        raise DegreeError(f"degree {s} below regularity {regularity(J)}")
    basis = monomial_basis(J.n, s)
    return MultiIndex(J.n, s, tuple(j for j, u in enumerate(basis, start=1) if not J.contains(u)))


def hilbert_polynomial_of_borel_set(terms, n, s):
    """Hilbert polynomial of P/(B) for an elevation-closed degree-s set B.

    Uses the unique decomposition u*w with u in B and max(w) <= min(u), so
    |(B)_t| = sum_u C(min(u) + t - s, min(u)).
    """
    poly = IntegerPolynomial.binomial_in_t(n, n)
    for u in terms:
        m = min_var(u)
        poly = poly - IntegerPolynomial.binomial_in_t(m, m - s)
    return poly


def borel_sets(n, t, size):
    """All elevation-closed subsets of monomial_basis(n, t) with ``size`` elements.

    Walks the basis from the top; a term may join only after all its
    elevations (which are larger) have joined.
    """
    basis = monomial_basis(n, t).terms
    total = len(basis)
    if size < 0 or size > total:
        return
    chosen = []
    chosen_set = set()
    ups = [elevations(u) for u in basis]

    def walk(k):
        need = size - len(chosen)
        if need == 0:
            yield tuple(chosen)
            return
        if total - k < need:
            return
        u = basis[k]
        if ups[k] <= chosen_set:
            chosen.append(u)
            chosen_set.add(u)
            yield from walk(k + 1)
            chosen.pop()
            chosen_set.discard(u)
        yield from walk(k + 1)

    yield from walk(0)


def enumerate_borel(n, p, rprime):
    """Saturated strongly stable ideals with Hilbert polynomial p and regularity <= r'."""
    if isinstance(p, str):
        p = parse_polynomial(p)
    r = gotzmann_number(p)
    if rprime < 1 or rprime > max(r, 1):
        raise DomainError(f"need 0 < r' <= r = {r}")
    N = comb(n + rprime, n)
    q = N - p.value(rprime)
    found = {}
    if q < 0:
        return []
    for B in borel_sets(n, rprime, q):
        if hilbert_polynomial_of_borel_set(B, n, rprime) != p:
            continue
        if not B:
            # empty set: the zero ideal, only for p = C(t+n, n)
            continue
        J = saturate(BorelIdeal(n, B))
        found[J.generators] = J
    return sorted(found.values(), key=MonomialIdeal.sort_key)


class Classification:
    NOT_BOREL = "NotBorel"
    IN_S = "InS"
    IN_S_P = "InS_p"
    IN_S_RPRIME_P = "InS_rprime_p"


def classify_multiindex(I, p, rprime):
    """Level of 𝓘 among 𝒮^[s], 𝒮^[s]_p and 𝒮^[r',s]_p."""
    from .hilbert import hilbert_polynomial

    if isinstance(p, str):
        p = parse_polynomial(p)
    J = ideal_from_multiindex(I)
    if not J.generators or not J.is_borel:
        return Classification.NOT_BOREL
    if hilbert_polynomial(J) != p:
        return Classification.IN_S
    if regularity(saturate(J)) > rprime:
        return Classification.IN_S_P
    return Classification.IN_S_RPRIME_P

