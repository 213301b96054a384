"""Sparse multivariate polynomials with rational coefficients in named parameters.

Used as the coefficient ring of parametric marked sets.  A monomial is a
sorted tuple of (name, exponent) pairs; the zero polynomial is the empty map.
"""

from __future__ import annotations

from fractions import Fraction


def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for name, e in b:
        out[name] = out.get(name, 0) + e
    return tuple(sorted(out.items()))


class ParamPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def var(cls, name):
        return cls({((name, 1),): 1})

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        return p

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def degree(self):
        return max((sum(e for _, e in m) for m in self.terms), default=-1)

    def variables(self):
        return sorted({name for m in self.terms for name, _ in m})

    def __add__(self, other):
        if not isinstance(other, ParamPoly):
            other = ParamPoly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return ParamPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, ParamPoly):
            other = ParamPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return ParamPoly.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, ParamPoly):
            c = Fraction(other)
            if c == 0:
                return ParamPoly()
            return ParamPoly._raw({m: v * c for m, v in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return ParamPoly._raw(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ParamPoly):
            other = ParamPoly.const(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, values):
        """Substitute rationals for every variable; missing names raise KeyError."""
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for name, e in m:
                v *= Fraction(values[name]) ** e
            total += v
        return total

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: (-sum(e for _, e in mc[0]), mc[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(name if e == 1 else f"{name}^{e}" for name, e in m)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    __repr__ = __str__

    def to_json(self):
        return [{"coeff": str(c), "vars": [[name, e] for name, e in m]} for m, c in self.sorted_terms()]
