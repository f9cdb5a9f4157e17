"""The induced non-commutative products and their structural identities."""

from fractions import Fraction

import pytest

from jjalgebra.algebra import (
    is_admissible_jj,
    is_right_skew,
    multiply,
    symmetrize,
    trivial_algebra,
)
from jjalgebra.classify5 import b3, h4_algebra, h4_omega, j50, j51, j52, j53, trivial5
from jjalgebra.exact_core import is_zero_vec, unit_vec, vec, zero_vec
from jjalgebra.forms import skew_form
from jjalgebra.induced import odot_on_kernel, odot_product, restrict_structure, star_product
from jjalgebra.operators import is_anti_derivation


def test_odot_h4_basis_products(h4, omega0):
    od = odot_product(h4, omega0)
    assert od.basis_product(1, 1) == vec([0, Fraction(1, 2), 0, 0])
    assert od.basis_product(1, 3) == vec([0, 0, 0, -1])
    assert od.basis_product(3, 1) == vec([0, 0, 0, 2])
    # symmetrization recovers e1.e3 = e4
    assert od.basis_product(1, 3)[3] + od.basis_product(3, 1)[3] == 1


def test_odot_trivial_base():
    alg = trivial_algebra(2)
    od = odot_product(alg, skew_form(2, {(1, 2): 1}))
    assert od.is_trivial()


def test_odot_requires_symplectic(h4):
    with pytest.raises(ValueError):
        odot_product(h4, skew_form(4, {(1, 2): 1, (2, 3): 2}))


def test_odot_defining_identity(h4, omega0):
    od = odot_product(h4, omega0)
    for i in range(1, 5):
        for j in range(1, 5):
            for k in range(1, 5):
                lhs = omega0(od.basis_product(i, j), h4.basis_vector(k))
                rhs = omega0(h4.basis_vector(i), h4.basis_product(j, k))
                assert lhs == rhs


def test_star_reeb_annihilates_left():
    s = j51()
    star = star_product(s)
    for i in range(1, 6):
        assert is_zero_vec(multiply(star, s.reeb, s.algebra.basis_vector(i)))


def test_star_reeb_right_action_is_product():
    s = j51()
    star = star_product(s)
    # x * xi = x . xi; in particular e1 * e5 = e3
    assert multiply(star, unit_vec(5, 1), s.reeb) == unit_vec(5, 3)
    for i in range(1, 6):
        x = s.algebra.basis_vector(i)
        assert multiply(star, x, s.reeb) == multiply(s.algebra, x, s.reeb)


def test_star_on_trivial_3d_base_is_zero():
    # frozen regression: the three-dimensional base has zero star table
    star = star_product(b3())
    assert star.is_trivial()


def test_star_defining_identity_via_psi():
    from jjalgebra.forms import psi_matrix
    from jjalgebra.exact_core import bilinear

    s = j52()
    star = star_product(s)
    m = psi_matrix(s.alpha, s.omega)
    for i in range(1, 6):
        for j in range(1, 6):
            for k in range(1, 6):
                lhs = bilinear(m, star.basis_product(i, j), s.algebra.basis_vector(k))
                rhs = bilinear(m, s.algebra.basis_vector(i), s.algebra.basis_product(j, k))
                assert lhs == rhs


def all_catalog():
    return [j50(), j51(), j52(), j53(), b3(), trivial5()]


def test_star_right_skew_and_admissible_on_catalog():
    for s in all_catalog():
        star = star_product(s)
        assert is_right_skew(star)
        assert is_admissible_jj(star)


def test_star_symmetrizes_to_base_product():
    for s in all_catalog():
        star = star_product(s)
        assert symmetrize(star).table == s.algebra.table


def test_star_restriction_identity_on_kernel():
    # on ker(alpha) x ker(alpha): x*y = x odot y + omega(x, y.xi) xi, and the
    # alpha-component of x*y is omega(x, y.xi)
    for s in all_catalog():
        star = star_product(s)
        restricted, odot_h = odot_on_kernel(s)
        k = odot_h.dim
        for i in range(k):
            hi = restricted.h_basis[i]
            for j in range(k):
                hj = restricted.h_basis[j]
                star_val = multiply(star, hi, hj)
                odot_val = restricted.embed(odot_h.basis_product(i + 1, j + 1))
                correction = s.omega(hi, multiply(s.algebra, hj, s.reeb))
                expected = tuple(o + correction * x for o, x in zip(odot_val, s.reeb))
                assert star_val == expected
                n = s.dim
                alpha_of_star = sum((s.alpha[m] * star_val[m] for m in range(n)), Fraction(0))
                assert alpha_of_star == correction


def test_reeb_multiplication_is_antiderivation_of_odot():
    # L_xi restricted to ker(alpha) is an anti-derivation of the odot product
    for s in all_catalog():
        restricted, odot_h = odot_on_kernel(s)
        k = odot_h.dim
        cols = []
        for j in range(k):
            img = multiply(s.algebra, s.reeb, restricted.h_basis[j])
            cols.append(restricted.coords(img))
        d = tuple(tuple(cols[j][r] for j in range(k)) for r in range(k))
        assert is_anti_derivation(odot_h, d)


def test_odot_on_random_symplectic_extension(rng):
    from jjalgebra.extensions import symplectic_double_extension
    from jjalgebra.sampling import sample_admissible_pair

    base = trivial_algebra(2)
    omega = skew_form(2, {(1, 2): 1})
    hits = 0
    for _ in range(10):
        phi, sq = sample_admissible_pair(rng, base)
        ok = all(
            omega(tuple(phi[r][c] for r in range(2)), sq) == 0 for c in range(2)
        )
        if not ok:
            continue
        alg, omega_ext = symplectic_double_extension(base, omega, phi, sq)
        od = odot_product(alg, omega_ext)
        assert is_right_skew(od)
        assert symmetrize(od).table == alg.table
        hits += 1
    assert hits >= 3
