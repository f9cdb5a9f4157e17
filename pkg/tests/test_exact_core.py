"""Exact linear algebra: pinned pivot conventions and brute-force oracles."""

from fractions import Fraction
from itertools import permutations
import random

import pytest

from jjalgebra.exact_core import (
    alternating_sum_top,
    determinant,
    identity,
    invert,
    is_zero_vec,
    kernel_basis,
    mat,
    mat_mul,
    mat_vec,
    rank,
    rat,
    rat_str,
    row_space_basis,
    solve_linear,
    unit_vec,
    vec,
    vec_sub,
    zero_mat,
)


def brute_determinant(m):
    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        sign = perm_sign(perm)
        prod = Fraction(1)
        for i in range(n):
            prod *= m[i][perm[i]]
        total += sign * prod
    return total


def perm_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def brute_alternating_sum(alpha, omega, dim):
    """Literal sum over all dim! permutations; oracle for the fast evaluator."""
    n = (dim - 1) // 2
    total = Fraction(0)
    for perm in permutations(range(dim)):
        term = perm_sign(perm) * alpha[perm[0]]
        if term == 0:
            continue
        for i in range(n):
            term *= omega[perm[2 * i + 1]][perm[2 * i + 2]]
            if term == 0:
                break
        total += term
    return total


def skew(dim, entries):
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for (i, j), c in entries.items():
        rows[i - 1][j - 1] = Fraction(c)
        rows[j - 1][i - 1] = -Fraction(c)
    return mat(rows)


def test_rat_parsing_round_trip():
    assert rat("3/4") == Fraction(3, 4)
    assert rat("-7") == Fraction(-7)
    assert rat_str(Fraction(-3, 4)) == "-3/4"
    assert rat_str(Fraction(5)) == "5"
    with pytest.raises(ValueError):
        rat("1/0")


def test_solve_identity():
    a = identity(2)
    assert solve_linear(a, vec([3, "-1/2"])) == vec([3, "-1/2"])


def test_solve_inconsistent_rows():
    a = mat([[1, 1], [2, 2]])
    assert solve_linear(a, vec([1, 3])) is None


def test_solve_free_variable_zeroed():
    a = mat([[1, 1], [2, 2]])
    assert solve_linear(a, vec([1, 2])) == vec([1, 0])


def test_solve_round_trip_random():
    rng = random.Random(7)
    for _ in range(40):
        nrows = rng.randint(1, 5)
        ncols = rng.randint(1, 5)
        a = mat([[rng.randint(-4, 4) for _ in range(ncols)] for _ in range(nrows)])
        x0 = vec([Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(ncols)])
        b = mat_vec(a, x0)
        x = solve_linear(a, b)
        assert x is not None
        assert mat_vec(a, x) == b


def test_kernel_identity_trivial():
    assert kernel_basis(identity(3)) == []


def test_kernel_zero_matrix():
    basis = kernel_basis(zero_mat(2, 2))
    assert len(basis) == 2
    assert basis[0] == vec([1, 0]) and basis[1] == vec([0, 1])


def test_kernel_rank_two_in_dim_three():
    basis = kernel_basis(mat([[1, 1, 0], [0, 0, 1]]))
    assert len(basis) == 1
    v = basis[0]
    # proportional to (1, -1, 0)
    assert v[0] == -v[1] and v[2] == 0 and v[0] != 0


def test_kernel_members_annihilated_random():
    rng = random.Random(11)
    for _ in range(30):
        nrows = rng.randint(1, 4)
        ncols = rng.randint(1, 6)
        a = mat([[rng.randint(-3, 3) for _ in range(ncols)] for _ in range(nrows)])
        basis = kernel_basis(a)
        assert len(basis) == ncols - rank(a)
        for v in basis:
            assert is_zero_vec(mat_vec(a, v))
        if basis:
            assert rank(mat(basis)) == len(basis)


def test_determinant_identity_and_zero_row():
    assert determinant(identity(4)) == 1
    assert determinant(mat([[0, 0], [1, 2]])) == 0


def test_determinant_skew_form_dim4():
    # omega = e^14 + 2 e^23; value 4 confirmed by permutation-expansion oracle
    m = skew(4, {(1, 4): 1, (2, 3): 2})
    assert brute_determinant(m) == 4
    assert determinant(m) == 4


def test_determinant_matches_brute_force_random():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(1, 4)
        m = mat([[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)])
        assert determinant(m) == brute_determinant(m)


def test_invert_round_trip():
    m = mat([[1, 2], ["1/2", 3]])
    assert mat_mul(m, invert(m)) == identity(2)
    with pytest.raises(ValueError):
        invert(mat([[1, 1], [2, 2]]))


def test_row_space_basis_reduced():
    basis = row_space_basis([vec([2, 4]), vec([1, 2]), vec([0, 1])])
    assert basis == [vec([1, 0]), vec([0, 1])]


def test_alternating_sum_dim3():
    alpha = unit_vec(3, 3)
    omega = skew(3, {(1, 2): 1})
    value = alternating_sum_top(alpha, omega, 3)
    assert value == brute_alternating_sum(alpha, omega, 3)
    assert value != 0


def test_alternating_sum_dim5_nondegenerate():
    # alpha = e^5, omega = e^14 + 2 e^23: the standard five-dimensional pair
    alpha = unit_vec(5, 5)
    omega = skew(5, {(1, 4): 1, (2, 3): 2})
    value = alternating_sum_top(alpha, omega, 5)
    assert value == brute_alternating_sum(alpha, omega, 5)
    assert value != 0


def test_alternating_sum_dim5_degenerate():
    # e4 lies in the radical of e^12 + 2 e^23, so the top form vanishes
    alpha = unit_vec(5, 5)
    omega = skew(5, {(1, 2): 1, (2, 3): 2})
    assert alternating_sum_top(alpha, omega, 5) == 0
    assert brute_alternating_sum(alpha, omega, 5) == 0


def test_alternating_sum_matches_brute_random():
    rng = random.Random(19)
    for dim in (3, 5):
        for _ in range(10):
            alpha = vec([rng.randint(-2, 2) for _ in range(dim)])
            entries = {}
            for i in range(1, dim + 1):
                for j in range(i + 1, dim + 1):
                    entries[(i, j)] = rng.randint(-2, 2)
            omega = skew(dim, entries)
            assert alternating_sum_top(alpha, omega, dim) == brute_alternating_sum(alpha, omega, dim)


def test_alternating_sum_rejects_even_and_large():
    with pytest.raises(ValueError):
        alternating_sum_top(unit_vec(4, 4), zero_mat(4, 4), 4)
    with pytest.raises(ValueError):
        alternating_sum_top(unit_vec(13, 13), zero_mat(13, 13), 13)
