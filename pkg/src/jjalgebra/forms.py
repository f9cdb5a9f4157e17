"""Linear and bilinear forms; symplectic and cosymplectic predicates.

Conventions, pinned because the classification values depend on them:

* a 1-form is a plain coefficient tuple, alpha(e_i) = coeffs[i-1];
* a skew 2-form written as sum of c_ij e^{ij} with i < j has
  matrix[i-1][j-1] = c_ij and matrix[j-1][i-1] = -c_ij, consistent with
  e^i ^ e^j (e_k, e_l) = delta_ik delta_jl - delta_il delta_jk;
* non-degeneracy of alpha ^ omega^n is decided by the exact determinant
  of the matrix Psi = omega + alpha alpha^T; the factorial-size
  alternating sum in exact_core exists as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .algebra import Algebra, left_mult_matrix, multiply
from .exact_core import (
    Mat,
    Vec,
    ZERO,
    bilinear,
    determinant,
    is_zero_vec,
    mat_vec,
    rat,
    solve_linear,
    transpose,
    unit_vec,
    vec,
    zero_vec,
)

LinearForm = Vec  # alpha(e_i) = coeffs[i-1]

SKEW = "skew"
SYMMETRIC = "symmetric"
GENERAL = "none"


@dataclass(frozen=True)
class BilinearForm:
    matrix: Mat
    symmetry: str

    def __post_init__(self):
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix):
            raise ValueError("bilinear form matrix must be square")
        if self.symmetry == SKEW:
            ok = all(self.matrix[i][j] == -self.matrix[j][i] for i in range(n) for j in range(i, n))
        elif self.symmetry == SYMMETRIC:
            ok = all(
                self.matrix[i][j] == self.matrix[j][i] for i in range(n) for j in range(i + 1, n)
            )
        elif self.symmetry == GENERAL:
            ok = True
        else:
            raise ValueError(f"unknown symmetry tag {self.symmetry!r}")
        if not ok:
            raise ValueError(f"matrix does not match declared symmetry {self.symmetry!r}")

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def __call__(self, x: Vec, y: Vec) -> Fraction:
        return bilinear(self.matrix, x, y)


def covector(dim: int, terms: Mapping[int, object]) -> LinearForm:
    """1-form from sparse 1-based coefficients, e.g. covector(5, {5: 1}) = e^5."""
    out = [ZERO] * dim
    for i, c in terms.items():
        if not 1 <= i <= dim:
            raise ValueError(f"index {i} out of range 1..{dim}")
        out[i - 1] = rat(c)
    return tuple(out)


def skew_form(dim: int, terms: Mapping[tuple[int, int], object]) -> BilinearForm:
    """Skew form from e^{ij} coefficients with i < j."""
    rows = [[ZERO] * dim for _ in range(dim)]
    for (i, j), c in terms.items():
        if not (1 <= i < j <= dim):
            raise ValueError(f"skew term ({i},{j}) must satisfy 1 <= i < j <= {dim}")
        q = rat(c)
        rows[i - 1][j - 1] = q
        rows[j - 1][i - 1] = -q
    return BilinearForm(tuple(tuple(r) for r in rows), SKEW)


def symmetric_form(dim: int, terms: Mapping[tuple[int, int], object]) -> BilinearForm:
    """Symmetric form from coefficients with i <= j, mirrored."""
    rows = [[ZERO] * dim for _ in range(dim)]
    for (i, j), c in terms.items():
        if not (1 <= i <= j <= dim):
            raise ValueError(f"symmetric term ({i},{j}) must satisfy 1 <= i <= j <= {dim}")
        q = rat(c)
        rows[i - 1][j - 1] = q
        rows[j - 1][i - 1] = q
    return BilinearForm(tuple(tuple(r) for r in rows), SYMMETRIC)


def _cyclic_closed(a: Algebra, form: Mat) -> bool:
    """Cyclic sum of form(x.y, z) vanishes on all basis triples.

    For a commutative product and a (skew or symmetric) form the cyclic sum
    is symmetric in its three slots, so unordered triples suffice.
    """
    basis = [a.basis_vector(i) for i in range(1, a.dim + 1)]
    for i in range(a.dim):
        for j in range(i, a.dim):
            pij = a.table[i][j]
            for k in range(j, a.dim):
                total = bilinear(form, pij, basis[k])
                total += bilinear(form, a.table[k][i], basis[j])
                total += bilinear(form, a.table[j][k], basis[i])
                if total != 0:
                    return False
    return True


def is_cocycle(a: Algebra, theta: BilinearForm) -> bool:
    """Central-extension condition: cyclic sum of theta(x.y, z) = 0."""
    if theta.symmetry != SYMMETRIC:
        raise ValueError("cocycle check expects a symmetric form")
    return _cyclic_closed(a, theta.matrix)


def is_closed(a: Algebra, omega: BilinearForm) -> bool:
    if omega.symmetry != SKEW:
        raise ValueError("closedness check expects a skew form")
    return _cyclic_closed(a, omega.matrix)


def is_symplectic(a: Algebra, omega: BilinearForm) -> bool:
    """Non-degenerate (exact determinant) and closed.  Odd dimension is not an
    error: the determinant of a skew matrix is then 0, reported as degenerate."""
    if omega.symmetry != SKEW:
        raise ValueError("symplectic check expects a skew form")
    if determinant(omega.matrix) == 0:
        return False
    return _cyclic_closed(a, omega.matrix)


def psi_matrix(alpha: LinearForm, omega: BilinearForm) -> Mat:
    """Matrix of x -> omega(x, .) + alpha(x) alpha(.): M[i][j] = omega_ij + a_i a_j."""
    n = len(alpha)
    if omega.dim != n:
        raise ValueError("alpha/omega dimension mismatch")
    return tuple(
        tuple(omega.matrix[i][j] + alpha[i] * alpha[j] for j in range(n)) for i in range(n)
    )


@dataclass(frozen=True)
class CosymplecticDiagnosis:
    alpha_closed: bool
    omega_closed: bool
    nondegenerate: bool  # alpha ^ omega^n != 0, decided by det(Psi)

    @property
    def ok(self) -> bool:
        return self.alpha_closed and self.omega_closed and self.nondegenerate

    def first_failure(self) -> str | None:
        for name in ("alpha_closed", "omega_closed", "nondegenerate"):
            if not getattr(self, name):
                return name
        return None


def alpha_is_closed(a: Algebra, alpha: LinearForm) -> bool:
    for i in range(a.dim):
        for j in range(i, a.dim):
            prod = a.table[i][j]
            if sum((alpha[k] * prod[k] for k in range(a.dim)), ZERO) != 0:
                return False
    return True


def is_cosymplectic(a: Algebra, alpha: LinearForm, omega: BilinearForm) -> CosymplecticDiagnosis:
    """Diagnosis of the three cosymplectic conditions, in a fixed order."""
    if omega.symmetry != SKEW:
        raise ValueError("cosymplectic check expects a skew form")
    if a.dim % 2 == 0:
        raise ValueError("cosymplectic structures need odd dimension")
    if len(alpha) != a.dim or omega.dim != a.dim:
        raise ValueError("alpha/omega dimension mismatch")
    return CosymplecticDiagnosis(
        alpha_closed=alpha_is_closed(a, alpha),
        omega_closed=_cyclic_closed(a, omega.matrix),
        nondegenerate=determinant(psi_matrix(alpha, omega)) != 0,
    )


@dataclass(frozen=True)
class CosymplecticStructure:
    """A validated pair (alpha, omega) on a Jacobi-Jordan algebra with its
    Reeb vector cached; use CosymplecticStructure.build to construct."""

    algebra: Algebra
    alpha: LinearForm
    omega: BilinearForm
    reeb: Vec

    @classmethod
    def build(cls, algebra: Algebra, alpha: LinearForm, omega: BilinearForm) -> "CosymplecticStructure":
        diagnosis = is_cosymplectic(algebra, alpha, omega)
        if not diagnosis.ok:
            raise ValueError(f"not cosymplectic: {diagnosis.first_failure()} fails")
        xi = reeb_vector(algebra, alpha, omega)
        return cls(algebra, alpha, omega, xi)

    @property
    def dim(self) -> int:
        return self.algebra.dim


def reeb_vector(a: Algebra, alpha: LinearForm, omega: BilinearForm) -> Vec:
    """The unique xi with omega(xi, .) + alpha(xi) alpha(.) = alpha.

    Postcondition-checked: alpha(xi) = 1, omega(xi, .) = 0, xi.xi = 0.
    """
    m = psi_matrix(alpha, omega)
    xi = solve_linear(transpose(m), alpha)
    if xi is None:
        raise ValueError("Psi is singular; the structure is not cosymplectic")
    n = len(alpha)
    if sum((alpha[k] * xi[k] for k in range(n)), ZERO) != 1:
        raise ValueError("Reeb postcondition alpha(xi) = 1 failed")
    if not is_zero_vec(mat_vec(omega.matrix, xi)):
        raise ValueError("Reeb postcondition omega(xi, .) = 0 failed")
    if not is_zero_vec(multiply(a, xi, xi)):
        raise ValueError("Reeb postcondition xi.xi = 0 failed")
    return xi


def omega_phi(omega: BilinearForm, phi: Mat) -> BilinearForm:
    """Symmetrized pairing omega_phi(x, y) = omega(phi(x), y) + omega(phi(y), x).

    Symmetric in (x, y) for every phi (it is the double-extension cocycle),
    and zero exactly when phi is self-adjoint with respect to omega.
    """
    if omega.symmetry != SKEW:
        raise ValueError("omega_phi expects a skew form")
    n = omega.dim
    phi_t = transpose(phi)
    base = tuple(
        tuple(
            sum((phi_t[i][r] * omega.matrix[r][j] for r in range(n)), ZERO) for j in range(n)
        )
        for i in range(n)
    )  # entries omega(phi(e_i), e_j)
    rows = tuple(tuple(base[i][j] + base[j][i] for j in range(n)) for i in range(n))
    return BilinearForm(rows, SYMMETRIC)


def self_adjoint_wrt(omega: BilinearForm, d: Mat) -> bool:
    """omega(D(x), y) = omega(x, D(y)) on all basis pairs."""
    if omega.symmetry != SKEW:
        raise ValueError("self-adjointness check expects a skew form")
    n = omega.dim
    for i in range(n):
        for j in range(n):
            lhs = sum((d[r][i] * omega.matrix[r][j] for r in range(n)), ZERO)
            rhs = sum((omega.matrix[i][r] * d[r][j] for r in range(n)), ZERO)
            if lhs != rhs:
                return False
    return True


def restrict_form(omega: BilinearForm, basis: list[Vec]) -> BilinearForm:
    """Form restricted to the span of `basis`, in basis coordinates."""
    k = len(basis)
    rows = tuple(
        tuple(bilinear(omega.matrix, basis[i], basis[j]) for j in range(k)) for i in range(k)
    )
    return BilinearForm(rows, omega.symmetry)


@dataclass(frozen=True)
class CosymplecticIsoReport:
    algebra_morphism: bool
    invertible: bool
    alpha_compatible: bool
    omega_compatible: bool
    reeb_to_reeb: bool

    @property
    def ok(self) -> bool:
        return (
            self.algebra_morphism
            and self.invertible
            and self.alpha_compatible
            and self.omega_compatible
            and self.reeb_to_reeb
        )

    def first_failure(self) -> str | None:
        for name in (
            "algebra_morphism",
            "invertible",
            "alpha_compatible",
            "omega_compatible",
            "reeb_to_reeb",
        ):
            if not getattr(self, name):
                return name
        return None


def check_cosymplectic_isomorphism(
    phi_matrix: Mat, source: CosymplecticStructure, target: CosymplecticStructure
) -> CosymplecticIsoReport:
    """Full isomorphism check: algebra morphism, invertible, alpha and omega
    pulled back exactly, and Reeb vector carried to Reeb vector."""
    from .algebra import AlgebraMorphism, is_algebra_morphism
    from .exact_core import is_invertible

    phi = AlgebraMorphism(source.algebra, target.algebra, phi_matrix)
    morphism_ok = is_algebra_morphism(phi)
    invertible = source.dim == target.dim and is_invertible(phi_matrix)
    n = source.dim
    alpha_ok = all(
        sum((target.alpha[k] * phi.apply(source.algebra.basis_vector(i))[k] for k in range(n)), ZERO)
        == source.alpha[i - 1]
        for i in range(1, n + 1)
    )
    omega_ok = True
    images = [phi.apply(source.algebra.basis_vector(i)) for i in range(1, n + 1)]
    for i in range(n):
        for j in range(i + 1, n):
            if target.omega(images[i], images[j]) != source.omega.matrix[i][j]:
                omega_ok = False
                break
        if not omega_ok:
            break
    reeb_ok = invertible and phi.apply(source.reeb) == target.reeb
    return CosymplecticIsoReport(morphism_ok, invertible, alpha_ok, omega_ok, reeb_ok)
