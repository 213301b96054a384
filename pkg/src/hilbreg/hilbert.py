"""Exact integer and binomial arithmetic around Hilbert polynomials.

Covers numerical polynomials, Gotzmann decompositions, Macaulay growth,
Hilbert functions/polynomials of monomial ideals and the dimension
bookkeeping N(t), p(t), q(t), q'(t), q''(t), E, E' used by the Plücker layer.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import comb, factorial, lcm

from .errors import DomainError, NotAdmissible, NotStronglyStable
from .terms import Term, monomial_basis


def binomial(a, b):
    """C(a, b) with the conventions C(a, 0) = 1 and C(a, b) = 0 for b < 0 or 0 <= a < b."""
    if b < 0:
        return 0
    if b == 0:
        return 1
    if a >= 0:
        return comb(a, b) if a >= b else 0
    # generalized binomial for negative a; only reached through polynomial evaluation
    num = 1
    for k in range(b):
        num *= a - k
    return num // factorial(b)


class IntegerPolynomial:
    """Univariate polynomial in ``t`` with rational coefficients (low to high)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def binomial_in_t(cls, a, shift):
        """The polynomial C(t + shift, a) = (t+shift)(t+shift-1)...(t+shift-a+1)/a!."""
        poly = cls([1])
        for k in range(a):
            poly = poly * cls([shift - k, 1])
        return poly.scale(Fraction(1, factorial(a)))

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def value(self, t):
        """Integer value at ``t``; raises if the value is not integral."""
        v = self(t)
        if v.denominator != 1:
            raise DomainError(f"{self} is not integral at t={t}")
        return v.numerator

    def is_integer_valued(self):
        d = max(self.degree, 0)
        return all(self(t).denominator == 1 for t in range(d + 1))

    def __add__(self, other):
        other = _as_poly(other)
        m = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (m - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (m - len(other.coeffs))
        return IntegerPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return IntegerPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return IntegerPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntegerPolynomial(out)

    __rmul__ = __mul__

    def scale(self, c):
        return IntegerPolynomial(c * x for x in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = IntegerPolynomial([other])
        if not isinstance(other, IntegerPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntegerPolynomial({str(self)!r})"

    def __str__(self):
        return format_polynomial(self)

    def to_json(self):
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls(Fraction(c) for c in data)

    @classmethod
    def parse(cls, text):
        return parse_polynomial(text)


def _as_poly(x):
    if isinstance(x, IntegerPolynomial):
        return x
    return IntegerPolynomial([x])


def _format_integer_poly(coeffs):
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = "t" if k == 1 else f"t^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        text += sign + body
    return text


def format_polynomial(p):
    """Text form ``2*t+2`` or ``(t^2+3*t+2)/2`` (common denominator pulled out)."""
    den = reduce(lcm, (c.denominator for c in p.coeffs), 1)
    ints = [int(c * den) for c in p.coeffs]
    body = _format_integer_poly(ints)
    if den == 1:
        return body
    return f"({body})/{den}"


_TOKEN = re.compile(r"\s*(?:(\d+)|(t)|(.))")


def parse_polynomial(text):
    """Parse ``a*t^k`` sums with rational coefficients, parentheses and implicit products.

    Accepts e.g. ``2t+2``, ``2*t + 2``, ``(t^2+3*t+2)/2``, ``3/2*t - 1``.
    """
    tokens = []
    for num, var, op in _TOKEN.findall(text):
        if num:
            tokens.append(("num", int(num)))
        elif var:
            tokens.append(("t", None))
        elif op.strip():
            if op not in "+-*/^()":
                raise ValueError(f"unexpected character {op!r} in {text!r}")
            tokens.append((op, None))
    pos = 0

    def peek():
        return tokens[pos][0] if pos < len(tokens) else None

    def take(kind=None):
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of input in {text!r}")
        tok = tokens[pos]
        if kind is not None and tok[0] != kind:
            raise ValueError(f"expected {kind!r}, found {tok[0]!r} in {text!r}")
        pos += 1
        return tok

    def expr():
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take()[0] == "-" else 1
        acc = term().scale(sign)
        while peek() in ("+", "-"):
            op = take()[0]
            rhs = term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term():
        acc = power()
        while peek() in ("*", "/", "num", "t", "("):
            kind = peek()
            if kind == "/":
                take()
                den = power()
                if den.degree > 0 or den.is_zero():
                    raise ValueError(f"division by a non-constant or zero in {text!r}")
                acc = acc.scale(1 / den.coeffs[0])
            else:
                if kind == "*":
                    take()
                acc = acc * power()
        return acc

    def power():
        base = atom()
        if peek() == "^":
            take()
            e = take("num")[1]
            out = IntegerPolynomial([1])
            for _ in range(e):
                out = out * base
            return out
        return base

    def atom():
        kind = peek()
        if kind == "num":
            return IntegerPolynomial([take()[1]])
        if kind == "t":
            take()
            return IntegerPolynomial([0, 1])
        if kind == "(":
            take()
            inner = expr()
            take(")")
            return inner
        raise ValueError(f"cannot parse polynomial {text!r}")

    if not tokens:
        raise ValueError("empty polynomial")
    result = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return result


def gotzmann_decomposition(p):
    """Exponents (a_1 >= ... >= a_r >= 0) with p(t) = sum_i C(t + a_i - i + 1, a_i).

    Greedy: a_i is the degree of what is left after subtracting the previous
    binomials.  Raises :class:`NotAdmissible` when the remainder ever has a
    negative leading coefficient.
    """
    p = _as_poly(p)
    if not p.is_integer_valued():
        raise NotAdmissible(f"{p} is not integer-valued")
    rest = p
    seq = []
    while not rest.is_zero():
        a = rest.degree
        if rest.leading < 0:
            raise NotAdmissible(f"{p} is not admissible (remainder {rest} after {len(seq)} terms)")
        if seq and a > seq[-1]:
            raise NotAdmissible(f"{p}: Gotzmann exponents would increase")
        i = len(seq) + 1
        if a == 0:
            # the remaining constant is a run of C(., 0) = 1 terms
            seq.extend([0] * rest.value(0))
            break
        rest = rest - IntegerPolynomial.binomial_in_t(a, a - i + 1)
        seq.append(a)
    return seq


def gotzmann_number(p):
    return len(gotzmann_decomposition(p))


def is_admissible(p):
    try:
        gotzmann_decomposition(p)
    except NotAdmissible:
        return False
    return True


def macaulay_representation(a, t):
    """The t-th Macaulay representation of a as [(k_t, t), (k_{t-1}, t-1), ...]."""
    if t < 1:
        raise ValueError("Macaulay representation needs t >= 1")
    if a < 0:
        raise ValueError("a must be non-negative")
    rep = []
    j = t
    while a > 0 and j >= 1:
        k = j
        while comb(k + 1, j) <= a:
            k += 1
        rep.append((k, j))
        a -= comb(k, j)
        j -= 1
    return rep


def macaulay_growth(a, t):
    """a^<t>: the Macaulay bound on h(t+1) given h(t) = a."""
    return sum(comb(k + 1, j + 1) for k, j in macaulay_representation(a, t))


def _ideal_parts(J, n):
    gens = getattr(J, "generators", J)
    gens = list(gens)
    if n is None:
        n = getattr(J, "n", None)
    if n is None:
        if not gens:
            raise ValueError("cannot infer n from an empty generator list")
        n = len(gens[0]) - 1
    return gens, n


def ideal_degree_part(J, t, n=None):
    """The degree-t monomials lying in the monomial ideal J (descending DegRevLex)."""
    gens, n = _ideal_parts(J, n)
    gens = [g for g in gens if sum(g) <= t]
    return [u for u in monomial_basis(n, t) if any(g.divides(u) for g in gens)]


def hilbert_function(J, t, n=None):
    """dim_k (P/J)_t for a monomial ideal J given by generators."""
    if t < 0:
        return 0
    gens, n = _ideal_parts(J, n)
    return len(monomial_basis(n, t)) - len(ideal_degree_part(gens, t, n))


def interpolate(points):
    """Lagrange interpolation through integer nodes with exact arithmetic."""
    result = IntegerPolynomial()
    for i, (xi, yi) in enumerate(points):
        basis = IntegerPolynomial([1])
        den = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = basis * IntegerPolynomial([-xj, 1])
                den *= xi - xj
        result = result + basis.scale(Fraction(yi) / den)
    return result


def hilbert_polynomial(J, n=None):
    """Hilbert polynomial of P/J for a strongly stable J.

    Interpolates the Hilbert function at reg(J), ..., reg(J)+n and checks
    two further points.
    """
    from .borel import is_strongly_stable

    gens, n = _ideal_parts(J, n)
    if not is_strongly_stable(gens, n):
        raise NotStronglyStable("Hilbert polynomial by interpolation needs a strongly stable ideal")
    reg = max((sum(g) for g in gens), default=0)
    nodes = [(t, hilbert_function(gens, t, n)) for t in range(reg, reg + n + 1)]
    poly = interpolate(nodes)
    for t in (reg + n + 1, reg + n + 2):
        if poly(t) != hilbert_function(gens, t, n):
            raise RuntimeError(f"Hilbert polynomial interpolation mismatch at t={t}")
    return poly


_E_AFFORDABLE = 10**5


@dataclass(frozen=True)
class HilbertContext:
    """Dimension bookkeeping for the Grassmannian G(N(s)-p(s), N(s))."""

    n: int
    p: IntegerPolynomial
    d: int
    r: int
    rprime: int
    s: int
    gotzmann: tuple = field(repr=False)

    def N_at(self, t):
        return comb(self.n + t, self.n)

    def p_at(self, t):
        return self.p.value(t)

    def q_at(self, t):
        return self.N_at(t) - self.p_at(t)

    def qprime_at(self, t):
        """C(n-d-1+t, n-d-1): dimension of k[x_{d+1}, ..., x_n]_t."""
        return binomial(self.n - self.d - 1 + t, self.n - self.d - 1)

    def qsecond_at(self, t):
        return self.q_at(t) - self.qprime_at(t)

    @property
    def N(self):
        return self.N_at(self.s)

    @property
    def ps(self):
        return self.p_at(self.s)

    @property
    def q(self):
        return self.q_at(self.s)

    @property
    def qprime(self):
        return self.qprime_at(self.s)

    @property
    def qsecond(self):
        return self.qsecond_at(self.s)

    @property
    def E_prime(self):
        return comb(self.N, self.ps)

    @property
    def E(self):
        """C(N(r), p(r)), or None when N(r) is too large to evaluate cheaply."""
        Nr = self.N_at(self.r)
        if Nr > _E_AFFORDABLE:
            return None
        return comb(Nr, self.p_at(self.r))

    @property
    def grassmannian(self):
        """(p(s), N(s)) as in G_{p(s), N(s)}: quotients of rank p(s)."""
        return (self.ps, self.N)

    def summary(self):
        return {
            "n": self.n,
            "p": str(self.p),
            "d": self.d,
            "r": self.r,
            "rprime": self.rprime,
            "s": self.s,
            "N(s)": self.N,
            "p(s)": self.ps,
            "q(s)": self.q,
            "q'(s)": self.qprime,
            "q''(s)": self.qsecond,
            "E'": self.E_prime,
            "E": self.E,
        }


def context(n, p, rprime, s):
    """Validated :class:`HilbertContext` for ``r' <= s <= r``."""
    p = _as_poly(p) if not isinstance(p, str) else parse_polynomial(p)
    seq = gotzmann_decomposition(p)
    r = len(seq)
    if n < 1:
        raise DomainError("n must be positive")
    if not (rprime <= s <= r):
        raise DomainError(f"need r' <= s <= r, got r'={rprime}, s={s}, r={r}")
    ctx = HilbertContext(n=n, p=p, d=p.degree, r=r, rprime=rprime, s=s, gotzmann=tuple(seq))
    if not 0 < ctx.ps < ctx.N:
        raise DomainError(f"need 0 < p(s) < N(s), got p(s)={ctx.ps}, N(s)={ctx.N}")
    if ctx.d >= n:
        raise DomainError(f"deg p = {ctx.d} must be below n = {n}")
    return ctx
