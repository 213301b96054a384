"""Exact linear algebra over the rationals.

Matrices are lists of rows; entries may be ints or Fractions.  Everything
returns Fractions, never floats.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError


def to_fraction_matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows):
    """Reduced row echelon form; returns (matrix, pivot_columns)."""
    m = to_fraction_matrix(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                row = m[i]
                m[i] = [a - f * b for a, b in zip(row, pr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _integer_rows(rows):
    out = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction) and x.denominator != 1:
                den = den * x.denominator // _gcd(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def rank(rows):
    """Exact rank by fraction-free (integer) elimination."""
    m = [r for r in _integer_rows(rows) if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rk = 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        pr = m[rk]
        a = pr[c]
        for i in range(rk + 1, len(m)):
            b = m[i][c]
            if b:
                row = [a * x - b * y for x, y in zip(m[i], pr)]
                g = 0
                for x in row:
                    if x:
                        g = _gcd(g, x)
                        if g == 1:
                            break
                if g > 1:
                    row = [x // g for x in row]
                m[i] = row
        rk += 1
        if rk == len(m):
            break
    return rk


def det(matrix):
    """Determinant via Bareiss fraction-free elimination (exact)."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in matrix):
        raise DomainError("determinant of a non-square matrix")
    dens = 1
    rows = []
    for row in matrix:
        fr = [Fraction(x) for x in row]
        d = 1
        for x in fr:
            d = d * x.denominator // _gcd(d, x.denominator)
        dens *= d
        rows.append([int(x * d) for x in fr])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pk = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pk - rows[i][k] * rows[k][j]) // prev
        prev = pk
    return Fraction(sign * rows[n - 1][n - 1], dens)


def inverse(matrix):
    n = len(matrix)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(matrix)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)) or len(red) < n:
        raise DomainError("matrix is singular")
    return [row[n:] for row in red]


def nullspace(rows, ncols=None):
    """Basis of {x : rows . x = 0} as a list of vectors."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    red, piv = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(piv):
            v[pc] = -red[r][f]
        basis.append(v)
    return basis


def matmul(a, b):
    if not a:
        return []
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def in_row_space(vector, rows):
    return rank(list(rows) + [list(vector)]) == rank(rows)
