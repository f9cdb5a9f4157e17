"""Axiom predicates, invariants and morphisms on structure-constant algebras."""

from fractions import Fraction

import pytest

from jjalgebra.algebra import (
    AlgebraMorphism,
    algebra_from_products,
    anti_associator,
    center,
    derived_subalgebra,
    fingerprint,
    is_admissible_jj,
    is_algebra_morphism,
    is_anti_associative,
    is_jacobi_jordan,
    is_left_skew,
    is_right_skew,
    jacobiator,
    jordan_identity_holds,
    multiply,
    opposite,
    symmetrize,
    transport_algebra,
    trivial_algebra,
)
from jjalgebra.classify5 import j51, j52, j53
from jjalgebra.exact_core import identity, is_zero_vec, unit_vec, vec, zero_vec
from jjalgebra.forms import skew_form
from jjalgebra.induced import odot_product, star_product
from jjalgebra.sampling import random_algebra, random_invertible


def idempotent_dim1():
    return algebra_from_products(1, {(1, 1): {1: 1}})


def test_multiply_h4_table(h4):
    assert multiply(h4, unit_vec(4, 1), unit_vec(4, 1)) == unit_vec(4, 2)
    assert multiply(h4, unit_vec(4, 1), unit_vec(4, 3)) == unit_vec(4, 4)


def test_multiply_zero_bilinear(h4):
    assert multiply(h4, zero_vec(4), vec([1, 2, 3, 4])) == zero_vec(4)


def test_multiply_j51_table():
    alg = j51().algebra
    assert multiply(alg, unit_vec(5, 2), unit_vec(5, 5)) == vec([0, 0, 0, -2, 0])


def test_multiply_dimension_mismatch(h4):
    with pytest.raises(ValueError):
        multiply(h4, zero_vec(3), zero_vec(4))


def test_jacobiator_h4_vanishes(h4):
    e1, e3 = unit_vec(4, 1), unit_vec(4, 3)
    assert is_zero_vec(jacobiator(h4, e1, e1, e3))


def test_jacobiator_idempotent_nonzero():
    alg = idempotent_dim1()
    e1 = unit_vec(1, 1)
    assert jacobiator(alg, e1, e1, e1) == vec([3])


def test_jacobiator_trivial():
    alg = trivial_algebra(3)
    assert is_zero_vec(jacobiator(alg, unit_vec(3, 1), unit_vec(3, 2), unit_vec(3, 3)))


def test_is_jacobi_jordan_catalog(h4):
    assert is_jacobi_jordan(h4)
    for builder in (j51, j52, j53):
        assert is_jacobi_jordan(builder().algebra)


def test_is_jacobi_jordan_rejects_idempotent():
    assert not is_jacobi_jordan(idempotent_dim1())


def test_anti_associator_trivial():
    alg = trivial_algebra(2)
    assert is_zero_vec(anti_associator(alg, unit_vec(2, 1), unit_vec(2, 2), unit_vec(2, 1)))


def test_anti_associator_odot_of_h4(h4, omega0):
    # e1 odot e1 = e2/2 and e2 is an odot-annihilator, so the anti-associator
    # of (e1, e1, e1) collapses to zero
    od = odot_product(h4, omega0)
    e1 = unit_vec(4, 1)
    assert multiply(od, e1, e1) == vec([0, Fraction(1, 2), 0, 0])
    assert is_zero_vec(anti_associator(od, e1, e1, e1))


def test_anti_associator_commutative_associative_nonzero():
    # x(xx) + (xx)x = 2 x(xx), generically nonzero for an associative product
    alg = algebra_from_products(2, {(1, 1): {1: 1}, (1, 2): {2: 1}, (2, 2): {2: 0}})
    e1 = unit_vec(2, 1)
    assert anti_associator(alg, e1, e1, e1) == vec([2, 0])


def test_skew_predicates_trivial():
    alg = trivial_algebra(3)
    assert is_anti_associative(alg)
    assert is_right_skew(alg)
    assert is_left_skew(alg)
    assert is_admissible_jj(alg)


def test_odot_is_right_skew_and_admissible(h4, omega0):
    od = odot_product(h4, omega0)
    assert is_right_skew(od)
    assert is_admissible_jj(od)


def test_star_product_right_skew():
    star = star_product(j51())
    assert is_right_skew(star)


def test_symmetrize_odot_recovers_h4(h4, omega0):
    assert symmetrize(odot_product(h4, omega0)).table == h4.table


def test_symmetrize_star_recovers_base():
    s = j51()
    assert symmetrize(star_product(s)).table == s.algebra.table


def test_symmetrize_trivial():
    assert symmetrize(trivial_algebra(2)).table == trivial_algebra(2).table


def test_jordan_identity_on_catalog(h4):
    assert jordan_identity_holds(h4)
    assert jordan_identity_holds(j52().algebra)
    assert jordan_identity_holds(idempotent_dim1())


def test_jordan_identity_requires_commutative(h4, omega0):
    with pytest.raises(ValueError):
        jordan_identity_holds(odot_product(h4, omega0))


def test_center_and_derived_frozen_values():
    # (derived, center): hand-solved from the three product tables
    expected = {j51: (3, 1), j52: (2, 2), j53: (2, 3)}
    for builder, (derived_dim, center_dim) in expected.items():
        alg = builder().algebra
        derived = derived_subalgebra(alg)
        central = center(alg)
        assert (len(derived), len(central)) == (derived_dim, center_dim)
        for z in central:
            for i in range(1, alg.dim + 1):
                assert is_zero_vec(multiply(alg, z, alg.basis_vector(i)))
        for i in range(1, alg.dim + 1):
            for j in range(1, alg.dim + 1):
                from jjalgebra.exact_core import in_span

                assert in_span(derived, alg.basis_product(i, j))


def test_morphism_identity_on_h4(h4):
    assert is_algebra_morphism(AlgebraMorphism(h4, h4, identity(4)))


def test_morphism_broken_map_on_h4(h4):
    # e1 -> e1, e2 -> 0 breaks e1.e1 = e2
    m = [[0] * 4 for _ in range(4)]
    m[0][0] = 1
    m[2][2] = 1
    m[3][3] = 1
    from jjalgebra.exact_core import mat

    assert not is_algebra_morphism(AlgebraMorphism(h4, h4, mat(m)))


def test_case1_normalizer_is_morphism_on_parametric_algebra():
    # the case-1 automorphism at a31 = 1 extended by the Reeb direction maps
    # the parametric five-dimensional algebra onto J5,1
    from jjalgebra.classify5 import normalize_case

    result = normalize_case(5, 1)
    assert result.iso_report.algebra_morphism
    assert is_algebra_morphism(result.witness)


def test_anti_associative_implies_admissible(rng):
    # symmetrizing an anti-associative product always gives a Jacobi-Jordan
    # algebra; nilpotent rank-one products are anti-associative
    from jjalgebra.exact_core import mat

    alg = algebra_from_products(3, {(1, 1): {3: 1}}, commutative=False)
    assert is_anti_associative(alg)
    assert is_jacobi_jordan(symmetrize(alg))


def test_right_and_left_skew_imply_admissible(rng, h4, omega0):
    # right-skew witnesses come from induced products of symplectic data;
    # opposites are left-skew
    sources = [odot_product(h4, omega0), star_product(j51()), star_product(j53())]
    for alg in sources:
        assert is_right_skew(alg)
        assert is_admissible_jj(alg)
        op = opposite(alg)
        assert is_left_skew(op)
        assert is_admissible_jj(op)


def test_jj_implies_jordan_on_random_extensions(rng):
    from jjalgebra.extensions import central_extension
    from jjalgebra.sampling import sample_cocycle

    base = j51().algebra
    for _ in range(5):
        ext = central_extension(base, sample_cocycle(rng, base))
        assert is_jacobi_jordan(ext)
        assert jordan_identity_holds(ext)


def test_fingerprint_invariant_under_conjugation(rng):
    for builder in (j51, j52, j53):
        alg = builder().algebra
        fp = fingerprint(alg)
        for _ in range(6):
            t = random_invertible(rng, alg.dim)
            assert fingerprint(transport_algebra(alg, t)) == fp


def test_admissibility_criteria_agree_on_random_algebras(rng):
    # cyclic anti-associator criterion vs symmetrize-then-check, 1000 draws;
    # is_admissible_jj raises AdmissibilityMismatch if they ever part ways
    agree_true = 0
    for _ in range(1000):
        dim = rng.randint(1, 4)
        alg = random_algebra(rng, dim, commutative=False, density=0.5)
        if is_admissible_jj(alg):
            agree_true += 1
    assert agree_true >= 0  # the check itself is the assertion


def test_transport_preserves_jj(rng):
    alg = j52().algebra
    for _ in range(5):
        t = random_invertible(rng, 5)
        assert is_jacobi_jordan(transport_algebra(alg, t))
