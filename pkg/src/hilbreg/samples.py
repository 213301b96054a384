"""Seeded random inputs and the linear action of GL(n+1) on degree-s forms.

A group element is an (n+1)x(n+1) matrix G whose row j is the image of x_j.
Subspaces of S_s are row matrices over monomial_basis(n, s).
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .errors import DomainError
from .linalg import det, matmul, nullspace, rank
from .terms import Term, monomial_basis


def identity_matrix(n):
    return [[Fraction(int(i == j)) for j in range(n + 1)] for i in range(n + 1)]


def permutation_matrices(n):
    mats = []
    for perm in itertools.permutations(range(n + 1)):
        mats.append([[Fraction(int(perm[i] == j)) for j in range(n + 1)] for i in range(n + 1)])
    return mats


def random_upper_triangular(n, rng, bound=3):
    """Invertible upper-triangular matrix: x_j goes to a combination of x_k, k >= j."""
    mat = []
    for i in range(n + 1):
        row = []
        for j in range(n + 1):
            if j < i:
                row.append(Fraction(0))
            elif j == i:
                row.append(Fraction(rng.choice([v for v in range(-bound, bound + 1) if v])))
            else:
                row.append(Fraction(rng.randint(-bound, bound)))
        mat.append(row)
    return mat


def random_invertible(n, rng, bound=3):
    while True:
        mat = [[Fraction(rng.randint(-bound, bound)) for _ in range(n + 1)] for _ in range(n + 1)]
        if det(mat) != 0:
            return mat


def default_group_sample(n, seed=0, count=5):
    """Coordinate permutations plus ``count`` seeded random upper-triangular matrices."""
    rng = random.Random(seed)
    sample = [m for m in permutation_matrices(n) if m != identity_matrix(n)]
    sample.extend(random_upper_triangular(n, rng) for _ in range(count))
    return sample


def _poly_mul(a, b):
    out = {}
    for u, c in a.items():
        for v, d in b.items():
            w = u * v
            out[w] = out.get(w, 0) + c * d
    return {w: c for w, c in out.items() if c}


def induced_matrix(G, n, s):
    """Matrix of the substitution x_j -> row j of G on monomial_basis(n, s).

    Row k holds the coordinates of g(x^alpha(k)).
    """
    if len(G) != n + 1 or any(len(r) != n + 1 for r in G):
        raise DomainError(f"group element must be {(n + 1)}x{(n + 1)}")
    if det(G) == 0:
        raise DomainError("group element is singular")
    basis = monomial_basis(n, s)
    images = [{Term.var(k, n): Fraction(G[j][k]) for k in range(n + 1) if G[j][k]} for j in range(n + 1)]
    rows = []
    for u in basis:
        poly = {Term.one(n): Fraction(1)}
        for j, a in enumerate(u):
            for _ in range(a):
                poly = _poly_mul(poly, images[j])
        row = [Fraction(0)] * len(basis)
        for w, c in poly.items():
            row[basis.position(w) - 1] = c
        rows.append(row)
    return rows


def transform_subspace(L, G, n, s):
    """g(L) = L * A_g, with A_g the induced matrix on degree-s forms."""
    return matmul(L, induced_matrix(G, n, s))


def evaluation_kernel(points, n, s):
    """Degree-s forms vanishing at the given projective points, as rows."""
    basis = monomial_basis(n, s)
    cols = []
    for u in basis:
        col = []
        for pt in points:
            v = Fraction(1)
            for x, a in zip(pt, u):
                v *= Fraction(x) ** a
            col.append(v)
        cols.append(col)
    # rows of the evaluation matrix are points, columns monomials
    evaluation = [list(r) for r in zip(*cols)]
    return nullspace(evaluation, len(basis))


def random_points(n, count, rng, bound=5):
    return [[Fraction(rng.randint(-bound, bound)) for _ in range(n + 1)] for _ in range(count)]


def random_line_points(n, rng, per_line=3, bound=5):
    """``per_line`` points on a random line in P^n."""
    a = [rng.randint(-bound, bound) for _ in range(n + 1)]
    b = [rng.randint(-bound, bound) for _ in range(n + 1)]
    pts = []
    for k in range(per_line):
        lam, mu = 1, k + 1
        if k == 0:
            lam, mu = 1, 0
        pts.append([Fraction(lam * x + mu * y) for x, y in zip(a, b)])
    return pts


def random_subspace(N, dim, rng, bound=4):
    while True:
        rows = [[Fraction(rng.randint(-bound, bound)) for _ in range(N)] for _ in range(dim)]
        if rank(rows) == dim:
            return rows


def subspace_ideal_rank(L, n, s, t):
    """rk of the degree-t part of the ideal generated by the row space of L."""
    basis_s = monomial_basis(n, s)
    basis_t = monomial_basis(n, t)
    rows = []
    for eta in monomial_basis(n, t - s):
        for row in L:
            out = [0] * len(basis_t)
            for j, c in enumerate(row):
                if c:
                    out[basis_t.position(basis_s.terms[j] * eta) - 1] = c
            rows.append(out)
    return rank(rows)


def monomial_subspace(terms, n, s):
    """Unit rows for the given degree-s terms."""
    basis = monomial_basis(n, s)
    rows = []
    for u in terms:
        row = [Fraction(0)] * len(basis)
        row[basis.position(u) - 1] = Fraction(1)
        rows.append(row)
    return rows


def orbit_marked_basis(J, s, rng, bound=3, attempts=50):
    """Marked basis spanning g(J_s) for a random g; g(J) has J's Hilbert function."""
    from .borel import truncation
    from .errors import ChartMiss
    from .marked import marked_set_from_subspace

    base = monomial_subspace(truncation(J, s), J.n, s)
    for _ in range(attempts):
        G = random_invertible(J.n, rng, bound)
        try:
            return marked_set_from_subspace(transform_subspace(base, G, J.n, s), J, s)
        except ChartMiss:
            continue
    raise RuntimeError("no random translate landed in the chart")


def random_tail_marked_set(J, s, rng, density=0.5, bound=3):
    """Marked set with sparse random integer tails; almost never a marked basis."""
    from .borel import truncation
    from .marked import make_marked_set

    standard = J.standard_part(s)
    tails = {}
    for h in truncation(J, s):
        tails[h] = {g: rng.randint(-bound, bound) for g in standard if rng.random() < density}
    return make_marked_set(J, s, tails)


def perturb_marked_set(F, rng, bound=3):
    """Add a random nonzero integer to one tail coefficient."""
    from .marked import make_marked_set

    standard = F.J.standard_part(F.s)
    if not len(standard):
        return F
    tails = {f.head: f.tail_map() for f in F.polys}
    head = rng.choice(F.heads)
    gamma = rng.choice(standard.terms)
    delta = rng.choice([v for v in range(-bound, bound + 1) if v])
    tails[head][gamma] = tails[head].get(gamma, 0) + delta
    return make_marked_set(F.J, F.s, tails)
