"""Left multiplications, (anti-)derivation spaces, admissible-pair reports."""

from fractions import Fraction

import pytest

from jjalgebra.algebra import trivial_algebra
from jjalgebra.classify5 import j51
from jjalgebra.exact_core import (
    identity,
    in_span,
    is_zero_vec,
    mat,
    mat_add,
    mat_scale,
    mat_vec,
    unit_vec,
    vec,
    zero_mat,
    zero_vec,
)
from jjalgebra.operators import (
    AdmissiblePair,
    ader_space,
    check_admissible_pair,
    check_extended_pair,
    der_space,
    is_anti_derivation,
    is_derivation,
    left_mult,
)
from jjalgebra.sampling import random_vec


def test_left_mult_h4(h4):
    m = left_mult(h4, unit_vec(4, 1))
    assert mat_vec(m, unit_vec(4, 1)) == unit_vec(4, 2)
    assert mat_vec(m, unit_vec(4, 3)) == unit_vec(4, 4)
    assert mat_vec(m, unit_vec(4, 2)) == zero_vec(4)


def test_left_mult_zero_vector(h4):
    assert left_mult(h4, zero_vec(4)) == zero_mat(4, 4)


def test_left_mult_j51_reeb():
    alg = j51().algebra
    m = left_mult(alg, unit_vec(5, 5))
    assert mat_vec(m, unit_vec(5, 1)) == unit_vec(5, 3)
    assert mat_vec(m, unit_vec(5, 2)) == vec([0, 0, 0, -2, 0])


def test_left_mult_is_anti_derivation(rng, h4):
    for _ in range(6):
        x = random_vec(rng, 4)
        assert is_anti_derivation(h4, left_mult(h4, x))


def test_zero_map_is_both():
    alg = trivial_algebra(3)
    assert is_derivation(alg, zero_mat(3, 3))
    assert is_anti_derivation(alg, zero_mat(3, 3))


def test_identity_not_derivation_on_h4(h4):
    assert not is_derivation(h4, identity(4))


def test_ader_space_trivial_full():
    basis = ader_space(trivial_algebra(3))
    assert len(basis) == 9


def test_ader_space_h4_constraints(h4):
    basis = ader_space(h4)
    # regression: the anti-derivation space of H4 is seven-dimensional
    assert len(basis) == 7
    for d in basis:
        assert is_anti_derivation(h4, d)
        # the constraint list: a12 = a13 = a14 = 0, a24 = a32 = a34 = 0,
        # a22 = -2 a11, a42 = -2 a31, a44 = -a11 - a33
        assert d[0][1] == d[0][2] == d[0][3] == 0
        assert d[1][3] == d[2][1] == d[2][3] == 0
        assert d[1][1] == -2 * d[0][0]
        assert d[3][1] == -2 * d[2][0]
        assert d[0][0] + d[3][3] + d[2][2] == 0


def test_ader_closed_under_combinations(rng, h4):
    basis = ader_space(h4)
    combo = zero_mat(4, 4)
    for b in basis:
        combo = mat_add(combo, mat_scale(Fraction(rng.randint(-3, 3)), b))
    assert is_anti_derivation(h4, combo)


def test_left_mults_lie_in_ader_span(h4):
    basis = ader_space(h4)
    flat_basis = [tuple(v for row in b for v in row) for b in basis]
    for i in range(1, 5):
        m = left_mult(h4, unit_vec(4, i))
        flat = tuple(v for row in m for v in row)
        assert in_span(flat_basis, flat)


def test_der_space_h4_members(h4):
    for d in der_space(h4):
        assert is_derivation(h4, d)


def test_admissible_pair_zero(h4):
    report = check_admissible_pair(h4, AdmissiblePair(zero_mat(4, 4), zero_vec(4)))
    assert report.ok and report.first_failure() is None


def test_admissible_pair_fails_third_condition_only():
    # on the five-dimensional algebra with a nontrivial Reeb action, phi = L_e1
    # and a = e4 pass the kernel condition but fail phi^2 = -L_a/2
    alg = j51().algebra
    phi = left_mult(alg, unit_vec(5, 1))
    report = check_admissible_pair(alg, AdmissiblePair(phi, unit_vec(5, 4)))
    assert report.anti_derivation
    assert report.a_in_kernel
    assert not report.square_is_half_left_mult
    assert report.first_failure() == "square_is_half_left_mult"


def test_lx_with_square_is_always_admissible():
    # (L_x, x.x) is admissible in any Jacobi-Jordan algebra
    from jjalgebra.algebra import multiply

    alg = j51().algebra
    x = vec([1, 2, 0, -1, 3])
    report = check_admissible_pair(alg, AdmissiblePair(left_mult(alg, x), multiply(alg, x, x)))
    assert report.ok


def _family_pair(n):
    """phi sends the distinguished direction into the symplectic span;
    everything else to zero: the example datum over the trivial base."""
    dim = 2 * n + 1
    phis = [Fraction(k + 1) for k in range(2 * n)]
    avals = [Fraction(2) * phis[k] for k in range(2 * n)]
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for k in range(2 * n):
        rows[k][dim - 1] = phis[k]
    return mat(rows), tuple(avals) + (Fraction(0),), phis, avals


def test_family_pair_admissible():
    alg = trivial_algebra(5)
    phi, a_vec, _, _ = _family_pair(2)
    report = check_admissible_pair(alg, AdmissiblePair(phi, a_vec))
    assert report.ok


def test_extended_pair_zero(h4):
    theta = zero_mat(4, 4)
    report = check_extended_pair(h4, theta, zero_mat(4, 4), zero_vec(4), zero_vec(4))
    assert report.ok


def test_extended_pair_family_data():
    # over the trivial base: lambda(e_i) = -a_{n+i}/2 for i <= n and
    # +a_{i-n}/2 above, theta(e_{2n+1}, e_i) = -phi_{n+i} / +phi_{i-n}
    n = 2
    dim = 2 * n + 1
    alg = trivial_algebra(dim)
    phi, a_vec, phis, avals = _family_pair(n)
    lam = [Fraction(0)] * dim
    theta = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(1, n + 1):
        lam[i - 1] = -Fraction(avals[n + i - 1], 2)
        lam[n + i - 1] = Fraction(avals[i - 1], 2)
        theta[dim - 1][i - 1] = theta[i - 1][dim - 1] = -phis[n + i - 1]
        theta[dim - 1][n + i - 1] = theta[n + i - 1][dim - 1] = phis[i - 1]
    report = check_extended_pair(alg, mat(theta), phi, vec(lam), a_vec)
    assert report.ok


def test_extended_pair_broken_lambda():
    n = 1
    alg = trivial_algebra(3)
    phi, a_vec, _, _ = _family_pair(1)
    lam = vec([1, 1, 1])  # lambda(a) != 0
    report = check_extended_pair(alg, zero_mat(3, 3), phi, lam, a_vec)
    assert not report.ok
    assert report.first_failure() == "lambda_kills_a"


def test_extended_pair_rejects_asymmetric_theta(h4):
    theta = mat([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    with pytest.raises(ValueError):
        check_extended_pair(h4, theta, zero_mat(4, 4), zero_vec(4), zero_vec(4))


def test_ader_round_trip(rng):
    for alg in (trivial_algebra(2), j51().algebra):
        for d in ader_space(alg):
            assert is_anti_derivation(alg, d)
