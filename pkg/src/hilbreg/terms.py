"""Terms (monomials) in x_0, ..., x_n under DegRevLex with x_0 < ... < x_n.

A term is stored as its dense exponent vector ``(a_0, ..., a_n)``.  Positions
inside a :class:`TermList` are 1-based so they can be used verbatim as the
index sets of Plücker coordinates.
"""

from __future__ import annotations

import enum
import re
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

from .errors import DegreeError, DimensionMismatch


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class Term(tuple):
    """Exponent vector of a monomial; compares by DegRevLex."""

    __slots__ = ()

    def __new__(cls, exponents):
        t = tuple.__new__(cls, (int(a) for a in exponents))
        if not t:
            raise ValueError("a term needs at least one variable")
        if any(a < 0 for a in t):
            raise ValueError(f"negative exponent in {tuple(t)}")
        return t

    @classmethod
    def _fast(cls, exponents):
        # trusted constructor for hot loops
        return tuple.__new__(cls, exponents)

    @classmethod
    def one(cls, n):
        return cls._fast((0,) * (n + 1))

    @classmethod
    def var(cls, i, n):
        e = [0] * (n + 1)
        e[i] = 1
        return cls._fast(e)

    @property
    def n(self):
        return len(self) - 1

    @property
    def degree(self):
        return sum(self)

    def sort_key(self):
        return (sum(self), tuple(-a for a in self))

    def _check(self, other):
        if len(self) != len(other):
            raise DimensionMismatch(f"terms over different rings: {self!s} vs {other!s}")

    def __lt__(self, other):
        self._check(other)
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        self._check(other)
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other):
        self._check(other)
        return self.sort_key() > other.sort_key()

    def __ge__(self, other):
        self._check(other)
        return self.sort_key() >= other.sort_key()

    def __eq__(self, other):
        return tuple.__eq__(self, other)

    def __ne__(self, other):
        return tuple.__ne__(self, other)

    __hash__ = tuple.__hash__

    def __mul__(self, other):
        self._check(other)
        return Term._fast(a + b for a, b in zip(self, other))

    def divides(self, other):
        return all(a <= b for a, b in zip(self, other))

    def __truediv__(self, other):
        if not other.divides(self):
            raise ValueError(f"{other!s} does not divide {self!s}")
        return Term._fast(a - b for a, b in zip(self, other))

    def times_var(self, i):
        e = list(self)
        e[i] += 1
        return Term._fast(e)

    def __str__(self):
        return format_term(self)

    def __repr__(self):
        return f"Term({format_term(self)!r})"

    def to_json(self):
        return list(self)


def format_term(u):
    """Text form ``x3^2*x1``: descending variable index, ``1`` for the empty product."""
    parts = []
    for i in range(len(u) - 1, -1, -1):
        a = u[i]
        if a == 1:
            parts.append(f"x{i}")
        elif a > 1:
            parts.append(f"x{i}^{a}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_term(text, n):
    """Inverse of :func:`format_term`; ``n`` fixes the number of variables."""
    text = text.replace(" ", "")
    e = [0] * (n + 1)
    if text == "1":
        return Term(e)
    for factor in text.split("*"):
        m = _FACTOR.match(factor)
        if not m:
            raise ValueError(f"cannot parse term factor {factor!r} in {text!r}")
        i = int(m.group(1))
        if i > n:
            raise DimensionMismatch(f"variable x{i} outside x0..x{n}")
        e[i] += int(m.group(2) or 1)
    return Term(e)


def compare_degrevlex(u, v):
    """Return :class:`Ordering` of ``u`` relative to ``v``."""
    if len(u) != len(v):
        raise DimensionMismatch(f"terms over different rings: {u} vs {v}")
    du, dv = sum(u), sum(v)
    if du != dv:
        return Ordering.GT if du > dv else Ordering.LT
    for a, b in zip(u, v):
        if a != b:
            # smaller exponent on the smallest differing variable wins
            return Ordering.GT if a < b else Ordering.LT
    return Ordering.EQ


class TermList:
    """Terms of a single degree, strictly decreasing in DegRevLex, 1-based positions."""

    __slots__ = ("terms", "_pos")

    def __init__(self, terms):
        terms = tuple(terms)
        if terms:
            d = terms[0].degree
            if any(u.degree != d for u in terms):
                raise DegreeError("a TermList must be homogeneous")
        for a, b in zip(terms, terms[1:]):
            if not a > b:
                raise ValueError("TermList must be strictly decreasing in DegRevLex")
        self.terms = terms
        self._pos = {u: j for j, u in enumerate(terms, start=1)}

    @classmethod
    def from_set(cls, terms):
        return cls(sorted(set(terms), key=Term.sort_key, reverse=True))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, j):
        """1-based access: ``basis[j]`` is the j-th largest term."""
        if j < 1 or j > len(self.terms):
            raise IndexError(j)
        return self.terms[j - 1]

    def __contains__(self, u):
        return u in self._pos

    def position(self, u):
        return self._pos[u]

    def __eq__(self, other):
        if isinstance(other, TermList):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return "TermList([" + ", ".join(map(str, self.terms)) + "])"


@lru_cache(maxsize=None)
def monomial_basis(n, t):
    """All C(n+t, n) terms of degree ``t``, descending DegRevLex."""
    if n < 0 or t < 0:
        raise ValueError("n and t must be non-negative")
    terms = []
    for combo in combinations_with_replacement(range(n + 1), t):
        e = [0] * (n + 1)
        for i in combo:
            e[i] += 1
        terms.append(Term._fast(e))
    terms.sort(key=Term.sort_key, reverse=True)
    basis = TermList.__new__(TermList)
    basis.terms = tuple(terms)
    basis._pos = {u: j for j, u in enumerate(basis.terms, start=1)}
    assert len(basis) == comb(n + t, n)
    return basis


def min_var(u):
    for i, a in enumerate(u):
        if a:
            return i
    raise DegreeError("min_var of the constant term 1")


def max_var(u):
    for i in range(len(u) - 1, -1, -1):
        if u[i]:
            return i
    raise DegreeError("max_var of the constant term 1")


def elevations(u):
    """All elementary moves (x_j/x_i)*u with x_i | u and j > i."""
    out = set()
    n = len(u) - 1
    for i, a in enumerate(u):
        if not a:
            continue
        for j in range(i + 1, n + 1):
            e = list(u)
            e[i] -= 1
            e[j] += 1
            out.add(Term._fast(e))
    return out


def _homogeneous_degree(terms):
    degrees = {sum(u) for u in terms}
    if len(degrees) > 1:
        raise DegreeError(f"mixed degrees {sorted(degrees)}")
    return degrees.pop() if degrees else None


def is_borel_set(terms):
    """True iff the (single-degree) set is closed under elevations."""
    terms = set(terms)
    _homogeneous_degree(terms)
    return all(e in terms for u in terms for e in elevations(u))


def borel_closure(terms):
    """Smallest elevation-closed superset, as a :class:`TermList`."""
    closed = set(terms)
    _homogeneous_degree(closed)
    frontier = list(closed)
    while frontier:
        new = []
        for u in frontier:
            for e in elevations(u):
                if e not in closed:
                    closed.add(e)
                    new.append(e)
        frontier = new
    return TermList.from_set(closed)
