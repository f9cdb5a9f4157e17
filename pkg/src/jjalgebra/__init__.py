"""Exact-arithmetic toolkit for finite-dimensional Jacobi-Jordan algebras.

Everything is computed over the rationals with fraction arithmetic; no
floating point is used anywhere, so every predicate and construction is
decided exactly.  The main surfaces:

* ``algebra`` - structure-constant algebras and the axiom predicates;
* ``operators`` - (anti-)derivations and admissible-pair diagnostics;
* ``forms`` - symplectic and cosymplectic structures, Reeb vectors;
* ``induced`` - the non-commutative products defined by the structures;
* ``extensions`` - central/double extensions, suspension, correspondences;
* ``classify5`` - the five-dimensional catalog and census;
* ``docio`` / ``cli`` - the document format and the ``jjalg`` command.
"""

from .algebra import (
    Algebra,
    AlgebraMorphism,
    InvariantFingerprint,
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
    symmetrize,
    trivial_algebra,
)
from .exact_core import (
    Mat,
    Vec,
    alternating_sum_top,
    determinant,
    kernel_basis,
    rat,
    rat_str,
    solve_linear,
)
from .forms import (
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
from .induced import odot_product, star_product
from .operators import (
    AdmissiblePair,
    ader_space,
    check_admissible_pair,
    check_extended_pair,
    der_space,
    is_anti_derivation,
    is_derivation,
    left_mult,
)
from .extensions import (
    ExtensionError,
    ExtensionResult,
    central_extension,
    cosymplectic_double_extension_case1,
    cosymplectic_double_extension_case2,
    cosymplectic_from_symplectic,
    jj_double_extension,
    odd_family,
    suspension,
    symplectic_double_extension,
    symplectic_from_cosymplectic,
    unsuspend,
    verify_double_extension_decomposition,
)
from .classify5 import (
    CatalogEntry,
    catalog,
    full_census,
    h4_antiderivation_family,
    investigate_J50_J52,
    normalize_case,
    pairwise_distinction,
    trivial_base_census,
)

__all__ = [name for name in dir() if not name.startswith("_")]
