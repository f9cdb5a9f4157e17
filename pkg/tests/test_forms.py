"""Cocycles, symplectic and cosymplectic predicates, Psi, Reeb vectors."""

from fractions import Fraction

import pytest

from jjalgebra.algebra import multiply, trivial_algebra
from jjalgebra.classify5 import b3, j51, j53
from jjalgebra.exact_core import (
    alternating_sum_top,
    determinant,
    identity,
    is_zero_vec,
    mat,
    mat_vec,
    unit_vec,
    vec,
    zero_mat,
    zero_vec,
)
from jjalgebra.extensions import symplectic_from_cosymplectic
from jjalgebra.forms import (
    SKEW,
    SYMMETRIC,
    BilinearForm,
    CosymplecticStructure,
    covector,
    is_cocycle,
    is_cosymplectic,
    is_symplectic,
    omega_phi,
    psi_matrix,
    reeb_vector,
    self_adjoint_wrt,
    skew_form,
    symmetric_form,
)
from jjalgebra.operators import is_anti_derivation, left_mult
from jjalgebra.sampling import random_vec


def test_is_cocycle_zero(h4):
    assert is_cocycle(h4, symmetric_form(4, {}))


def test_is_cocycle_family_theta_on_trivial_base():
    alg = trivial_algebra(5)
    theta = symmetric_form(5, {(1, 5): -2, (3, 5): 1})
    assert is_cocycle(alg, theta)


def test_is_cocycle_e1_squared_on_h4(h4):
    # theta = (e^1)^2: products of H4 land in span{e2, e4}, which theta kills,
    # so the cyclic sum vanishes; frozen after expansion
    assert is_cocycle(h4, symmetric_form(4, {(1, 1): 1}))


def test_is_cocycle_rejects_skew(h4, omega0):
    with pytest.raises(ValueError):
        is_cocycle(h4, omega0)


def test_is_symplectic_h4(h4, omega0):
    assert is_symplectic(h4, omega0)


def test_is_symplectic_degenerate_form_from_the_example(h4):
    # e^12 + 2 e^23 pairs e4 with nothing, so it is degenerate on H4
    eta = skew_form(4, {(1, 2): 1, (2, 3): 2})
    assert determinant(eta.matrix) == 0
    assert not is_symplectic(h4, eta)


def test_is_symplectic_trivial_dim2():
    assert is_symplectic(trivial_algebra(2), skew_form(2, {(1, 2): 1}))


def test_is_symplectic_odd_dim_degenerate_not_error():
    assert not is_symplectic(trivial_algebra(3), skew_form(3, {(1, 2): 1}))


def test_is_cosymplectic_j51():
    s = j51()
    assert is_cosymplectic(s.algebra, s.alpha, s.omega).ok


def test_is_cosymplectic_trivial_base_dim3():
    s = b3()
    diag = is_cosymplectic(s.algebra, s.alpha, s.omega)
    assert diag.ok and diag.first_failure() is None


def test_is_cosymplectic_wrong_alpha_diagnosis():
    # on J5,1 with alpha = e^1 both closedness conditions still hold but Psi
    # degenerates, so the first reported failure is non-degeneracy
    s = j51()
    diag = is_cosymplectic(s.algebra, covector(5, {1: 1}), s.omega)
    assert not diag.ok
    assert diag.alpha_closed and diag.omega_closed
    assert diag.first_failure() == "nondegenerate"


def test_is_cosymplectic_even_dim_error(h4, omega0):
    with pytest.raises(ValueError):
        is_cosymplectic(h4, covector(4, {4: 1}), omega0)


def test_psi_matrix_dim3():
    alpha = covector(3, {3: 1})
    omega = skew_form(3, {(1, 2): 1})
    assert psi_matrix(alpha, omega) == mat([[0, 1, 0], [-1, 0, 0], [0, 0, 1]])


def test_psi_matrix_dim5_invertible():
    alpha = covector(5, {5: 1})
    omega = skew_form(5, {(1, 4): 1, (2, 3): 2})
    assert determinant(psi_matrix(alpha, omega)) != 0


def test_psi_matrix_degenerate():
    alpha = zero_vec(3)
    omega = skew_form(3, {(1, 2): 1})
    assert determinant(psi_matrix(alpha, omega)) == 0


def test_reeb_vector_j51():
    s = j51()
    assert reeb_vector(s.algebra, s.alpha, s.omega) == unit_vec(5, 5)


def test_reeb_vector_b3():
    s = b3()
    assert reeb_vector(s.algebra, s.alpha, s.omega) == unit_vec(3, 3)


def test_reeb_postconditions_catalog(catalog_structures):
    for s in catalog_structures.values():
        xi = s.reeb
        n = s.dim
        assert sum((s.alpha[k] * xi[k] for k in range(n)), Fraction(0)) == 1
        assert is_zero_vec(mat_vec(s.omega.matrix, xi))
        assert is_zero_vec(multiply(s.algebra, xi, xi))


def test_omega_phi_zero_map(omega0):
    assert omega_phi(omega0, zero_mat(4, 4)).matrix == zero_mat(4, 4)


def test_omega_phi_identity_vanishes(omega0):
    # omega(x, y) + omega(y, x) = 0
    assert omega_phi(omega0, identity(4)).matrix == zero_mat(4, 4)


def test_omega_phi_case1_map_vanishes(omega0):
    # the canonical nilpotent map is self-adjoint, so its pairing vanishes;
    # frozen after entry-wise expansion
    from jjalgebra.classify5 import family_d

    d = family_d(0, 1)
    assert omega_phi(omega0, d).matrix == zero_mat(4, 4)
    assert omega_phi(omega0, d).symmetry == SYMMETRIC


def test_omega_phi_nonzero_is_symmetric(omega0):
    phi = mat([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]])  # e1 -> e4
    result = omega_phi(omega0, phi)
    assert result.symmetry == SYMMETRIC
    assert result.matrix != zero_mat(4, 4)
    assert result.matrix == tuple(tuple(result.matrix[j][i] for j in range(4)) for i in range(4))


def test_self_adjoint_examples(omega0):
    from jjalgebra.classify5 import family_d

    assert self_adjoint_wrt(omega0, zero_mat(4, 4))
    assert self_adjoint_wrt(omega0, family_d(3, -2))
    # scalar maps satisfy omega(Dx, y) = omega(x, Dy) identically
    assert self_adjoint_wrt(omega0, identity(4))
    # a rank-one projection does not: omega(De1, e4) = 1 but omega(e1, De4) = 0
    proj = mat([[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    assert not self_adjoint_wrt(omega0, proj)


def test_self_adjoint_iff_omega_phi_zero(rng, omega0):
    for _ in range(20):
        phi = tuple(tuple(Fraction(rng.randint(-2, 2)) for _ in range(4)) for _ in range(4))
        assert self_adjoint_wrt(omega0, phi) == (omega_phi(omega0, phi).matrix == zero_mat(4, 4))


def test_alternating_sum_agrees_with_psi_determinant(rng):
    # the factorial evaluator and the determinant criterion agree on the
    # zero/nonzero question
    for dim in (3, 5, 7):
        for _ in range(40):
            alpha = random_vec(rng, dim, span=2)
            entries = {}
            for i in range(1, dim + 1):
                for j in range(i + 1, dim + 1):
                    entries[(i, j)] = rng.randint(-2, 2)
            omega = skew_form(dim, entries)
            alt = alternating_sum_top(alpha, omega.matrix, dim)
            det = determinant(psi_matrix(alpha, omega))
            assert (alt != 0) == (det != 0)


def test_reeb_multiplication_properties(catalog_structures):
    # L_xi is an anti-derivation; restricted to ker(alpha) it is self-adjoint
    # and squares to zero
    for s in catalog_structures.values():
        d_ambient = left_mult(s.algebra, s.reeb)
        assert is_anti_derivation(s.algebra, d_ambient)
        reduction = symplectic_from_cosymplectic(s)
        assert self_adjoint_wrt(reduction.omega_h, reduction.d)


def test_kernel_of_alpha_is_symplectic_ideal(catalog_structures):
    from jjalgebra.exact_core import in_span
    from jjalgebra.induced import restrict_structure

    for s in catalog_structures.values():
        restricted = restrict_structure(s)
        assert is_symplectic(restricted.algebra, restricted.omega_h)
        for hb in restricted.h_basis:
            for i in range(1, s.dim + 1):
                prod = multiply(s.algebra, hb, s.algebra.basis_vector(i))
                assert in_span(restricted.h_basis, prod)


def test_build_rejects_invalid():
    s = j51()
    with pytest.raises(ValueError):
        CosymplecticStructure.build(s.algebra, covector(5, {1: 1}), s.omega)


def test_bilinear_form_symmetry_validation():
    with pytest.raises(ValueError):
        BilinearForm(mat([[0, 1], [1, 0]]), SKEW)
    with pytest.raises(ValueError):
        BilinearForm(mat([[0, 1], [-1, 0]]), SYMMETRIC)
