import random
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from hilbreg.linalg import matmul
from hilbreg.samples import (
    default_group_sample,
    evaluation_kernel,
    induced_matrix,
    permutation_matrices,
    random_invertible,
    random_points,
    random_upper_triangular,
    subspace_ideal_rank,
)
from hilbreg.terms import monomial_basis


@given(st.integers(0, 10**6))
def test_induced_matrix_is_multiplicative(seed):
    rng = random.Random(seed)
    G, H = random_invertible(2, rng), random_invertible(2, rng)
    assert matmul(induced_matrix(G, 2, 2), induced_matrix(H, 2, 2)) == induced_matrix(matmul(G, H), 2, 2)


def test_upper_triangular_preserves_pure_variables():
    # x_j goes to a combination of x_k with k >= j
    G = random_upper_triangular(3, random.Random(0))
    assert all(G[i][j] == 0 for i in range(4) for j in range(i))


def test_default_sample_shape():
    sample = default_group_sample(3, seed=0)
    assert len(sample) == len(permutation_matrices(3)) - 1 + 5
    assert default_group_sample(3, seed=0) == sample


def test_evaluation_kernel_vanishes_at_points():
    rng = random.Random(1)
    pts = random_points(2, 2, rng)
    basis = monomial_basis(2, 2)
    for row in evaluation_kernel(pts, 2, 2):
        for pt in pts:
            value = Fraction(0)
            for c, u in zip(row, basis):
                term = Fraction(1)
                for x, a in zip(pt, u):
                    term *= Fraction(x) ** a
                value += c * term
            assert value == 0


def test_ideal_rank_of_two_skew_lines():
    # x2, x3 and x0, x1 cut two skew lines: degree-2 part of the intersection ideal
    basis = monomial_basis(3, 2)
    gens = ["x3*x1", "x3*x0", "x2*x1", "x2*x0"]
    rows = []
    for g in gens:
        row = [0] * len(basis)
        row[[str(u) for u in basis].index(g)] = 1
        rows.append(row)
    assert subspace_ideal_rank(rows, 3, 2, 3) == 20 - 8
