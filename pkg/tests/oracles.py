"""Brute-force reference implementations.

Deliberately naive and independent of the library code paths they check:
explicit enumeration with itertools, permutation-sum determinants, direct
divisibility counts.
"""

import itertools
from fractions import Fraction
from math import comb


def all_exponents(n, t):
    """All exponent vectors of degree t in n+1 variables (unordered)."""
    return [e for e in itertools.product(range(t + 1), repeat=n + 1) if sum(e) == t]


def degrevlex_greater(u, v):
    """u > v: higher degree, else the first nonzero entry of u - v is negative."""
    if sum(u) != sum(v):
        return sum(u) > sum(v)
    for a, b in zip(u, v):
        if a - b != 0:
            return a - b < 0
    return False


def sorted_desc(terms):
    out = list(terms)
    # bubble sort with the oracle comparator, to avoid sharing a key function
    for i in range(len(out)):
        for j in range(len(out) - 1 - i):
            if degrevlex_greater(out[j + 1], out[j]):
                out[j], out[j + 1] = out[j + 1], out[j]
    return out


def elevations(u):
    n = len(u) - 1
    out = set()
    for v in all_exponents(n, sum(u)):
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                moved = list(u)
                if moved[i] == 0:
                    continue
                moved[i] -= 1
                moved[j] += 1
                if tuple(moved) == tuple(v):
                    out.add(tuple(v))
    return out


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def ideal_part(gens, n, t):
    return [e for e in all_exponents(n, t) if any(divides(g, e) for g in gens)]


def hilbert_function(gens, n, t):
    return comb(n + t, n) - len(ideal_part(gens, n, t))


def interpolate_at(points, x):
    """Value at x of the Lagrange polynomial through ``points``."""
    total = Fraction(0)
    for i, (xi, yi) in enumerate(points):
        term = Fraction(yi)
        for j, (xj, _) in enumerate(points):
            if j != i:
                term *= Fraction(x - xj, xi - xj)
        total += term
    return total


def hilbert_polynomial_values(gens, n, start, xs):
    """Hilbert polynomial values at xs from n+1 Hilbert-function samples starting at ``start``."""
    pts = [(t, hilbert_function(gens, n, t)) for t in range(start, start + n + 1)]
    return [interpolate_at(pts, x) for x in xs]


def is_strongly_stable_set(terms):
    terms = set(map(tuple, terms))
    return all(e in terms for u in terms for e in elevations(u))


def minimal(gens):
    gens = sorted(set(map(tuple, gens)), key=sum)
    kept = []
    for g in gens:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return kept


def saturate(gens):
    return minimal([(0,) + tuple(g[1:]) for g in gens])


def brute_force_borel(n, p_values, rprime):
    """Saturated Borel ideals with reg <= r' whose Hilbert polynomial takes p_values.

    ``p_values`` maps t -> p(t) at the n+1 interpolation nodes starting at r'
    plus two more.  Walks all C(N, q) subsets of the degree-r' terms.
    """
    basis = all_exponents(n, rprime)
    q = len(basis) - int(p_values[rprime])
    index = {u: k for k, u in enumerate(basis)}
    ups = []
    for u in basis:
        m = 0
        for e in elevations(u):
            m |= 1 << index[e]
        ups.append(m)
    found = set()
    for subset in itertools.combinations(range(len(basis)), q):
        mask = 0
        for k in subset:
            mask |= 1 << k
        if any(ups[k] & ~mask for k in subset):
            continue
        gens = [basis[k] for k in subset]
        ok = all(hilbert_function(gens, n, t) == v for t, v in p_values.items())
        if ok:
            found.add(tuple(sorted(saturate(gens))))
    return found


def permutation_det(matrix):
    n = len(matrix)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = Fraction(1)
        for i in range(n):
            prod *= matrix[i][perm[i]]
        total += -prod if inv % 2 else prod
    return total


def gaussian_rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    rk = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rk, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(len(m)):
            if i != rk and m[i][c] != 0:
                f = m[i][c] / m[rk][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rk])]
        rk += 1
    return rk


def lex_growth(a, t, nvars):
    """h(t+1) of the lex ideal whose degree-t complement has size a, in nvars variables.

    The lex ideal in degree t is spanned by the lex-largest N(t) - a terms.
    """
    lex = lambda e: tuple(e)  # lex with x_0 > x_1 > ...
    deg_t = sorted(all_exponents(nvars - 1, t), key=lex, reverse=True)
    if a > len(deg_t):
        return None
    ideal_t = deg_t[: len(deg_t) - a]
    generated = set()
    for g in ideal_t:
        for i in range(nvars):
            e = list(g)
            e[i] += 1
            generated.add(tuple(e))
    return comb(nvars + t, nvars - 1) - len(generated)


def gotzmann_search(values, max_len=12, max_deg=3):
    """Shortest non-increasing (a_i) with sum C(t + a_i - i + 1, a_i) matching ``values`` {t: p(t)}."""

    def binom(top, k):
        if k < 0:
            return 0
        if k == 0:
            return 1
        num = 1
        for j in range(k):
            num *= top - j
        den = 1
        for j in range(1, k + 1):
            den *= j
        return num // den

    def total(seq, t):
        return sum(binom(t + a - i + 1, a) for i, a in enumerate(seq, start=1))

    best = None
    stack = [()]
    while stack:
        seq = stack.pop()
        if seq and all(total(seq, t) == v for t, v in values.items()):
            if best is None or len(seq) < len(best):
                best = seq
            continue
        if len(seq) >= max_len:
            continue
        top = seq[-1] if seq else max_deg
        for a in range(top, -1, -1):
            stack.append(seq + (a,))
    return best
