"""Derivations, anti-derivations, and admissible-pair diagnostics.

The double-extension constructions need to know exactly which of their
preconditions fail, so the check_* operations return structured reports
with one named entry per condition instead of a single boolean.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Algebra, left_mult_matrix, multiply
from .exact_core import (
    Mat,
    Vec,
    ZERO,
    bilinear,
    is_zero_vec,
    kernel_basis,
    mat_mul,
    mat_scale,
    mat_vec,
    vec_add,
)


def left_mult(a: Algebra, x: Vec) -> Mat:
    """Matrix of y -> x.y; equals right multiplication when a is commutative."""
    return left_mult_matrix(a, x)


def is_derivation(a: Algebra, d: Mat) -> bool:
    return _leibniz_defect_zero(a, d, sign=1)


def is_anti_derivation(a: Algebra, d: Mat) -> bool:
    return _leibniz_defect_zero(a, d, sign=-1)


def _leibniz_defect_zero(a: Algebra, d: Mat, sign: int) -> bool:
    if len(d) != a.dim or any(len(row) != a.dim for row in d):
        raise ValueError("map size does not match the algebra dimension")
    images = [mat_vec(d, a.basis_vector(i)) for i in range(1, a.dim + 1)]
    for i in range(1, a.dim + 1):
        for j in range(1, a.dim + 1):
            lhs = mat_vec(d, a.basis_product(i, j))
            rhs = vec_add(
                multiply(a, images[i - 1], a.basis_vector(j)),
                multiply(a, a.basis_vector(i), images[j - 1]),
            )
            if sign < 0:
                rhs = tuple(-c for c in rhs)
            if lhs != rhs:
                return False
    return True


def _derivation_system(a: Algebra, sign: int) -> Mat:
    """Linear system on the n^2 entries of D (row-major d[r][c], D(e_c) = sum_r d[r][c] e_r)
    expressing D(e_i.e_j) - sign*(D(e_i).e_j + e_i.D(e_j)) = 0."""
    n = a.dim
    rows = []
    for i in range(n):
        for j in range(n):
            cij = a.table[i][j]
            for k in range(n):
                coeff = [ZERO] * (n * n)
                # D(e_i.e_j)_k = sum_m c_ij^m d[k][m]
                for m in range(n):
                    if cij[m] != 0:
                        coeff[k * n + m] += cij[m]
                # (D(e_i).e_j)_k = sum_r d[r][i] c_rj^k
                for r in range(n):
                    crj = a.table[r][j][k]
                    if crj != 0:
                        coeff[r * n + i] -= sign * crj
                # (e_i.D(e_j))_k = sum_r d[r][j] c_ir^k
                for r in range(n):
                    cir = a.table[i][r][k]
                    if cir != 0:
                        coeff[r * n + j] -= sign * cir
                if any(c != 0 for c in coeff):
                    rows.append(tuple(coeff))
    return tuple(rows)


def _unflatten(v: Vec, n: int) -> Mat:
    return tuple(tuple(v[r * n + c] for c in range(n)) for r in range(n))


def ader_space(a: Algebra) -> list[Mat]:
    """Deterministic basis of the space of anti-derivations."""
    system = _derivation_system(a, sign=-1)
    if not system:
        system = ((ZERO,) * (a.dim * a.dim),)
    return [_unflatten(v, a.dim) for v in kernel_basis(system)]


def der_space(a: Algebra) -> list[Mat]:
    """Deterministic basis of the space of derivations."""
    system = _derivation_system(a, sign=1)
    if not system:
        system = ((ZERO,) * (a.dim * a.dim),)
    return [_unflatten(v, a.dim) for v in kernel_basis(system)]


@dataclass(frozen=True)
class AdmissiblePair:
    phi: Mat
    a: Vec


@dataclass(frozen=True)
class AdmissiblePairReport:
    """Pass/fail of the three admissible-pair conditions, reported separately."""

    anti_derivation: bool
    a_in_kernel: bool
    square_is_half_left_mult: bool

    @property
    def ok(self) -> bool:
        return self.anti_derivation and self.a_in_kernel and self.square_is_half_left_mult

    def first_failure(self) -> str | None:
        for name in ("anti_derivation", "a_in_kernel", "square_is_half_left_mult"):
            if not getattr(self, name):
                return name
        return None


def check_admissible_pair(alg: Algebra, pair: AdmissiblePair) -> AdmissiblePairReport:
    """phi in Ader, a in ker(phi), phi^2 = -1/2 L_a, each checked exactly."""
    phi, a = pair.phi, pair.a
    cond1 = is_anti_derivation(alg, phi)
    cond2 = is_zero_vec(mat_vec(phi, a))
    cond3 = mat_mul(phi, phi) == mat_scale(Fraction(-1, 2), left_mult(alg, a))
    return AdmissiblePairReport(cond1, cond2, cond3)


@dataclass(frozen=True)
class ExtendedPairReport:
    """Admissibility of (phi, a) plus the three compatibility rows tying in
    the cocycle theta and the 1-form lambda."""

    admissible: AdmissiblePairReport
    lambda_kills_a: bool
    lambda_of_products: bool
    theta_pairs_a: bool

    @property
    def ok(self) -> bool:
        return (
            self.admissible.ok
            and self.lambda_kills_a
            and self.lambda_of_products
            and self.theta_pairs_a
        )

    def first_failure(self) -> str | None:
        bad = self.admissible.first_failure()
        if bad is not None:
            return bad
        for name in ("lambda_kills_a", "lambda_of_products", "theta_pairs_a"):
            if not getattr(self, name):
                return name
        return None


def check_extended_pair(alg: Algebra, theta: Mat, phi: Mat, lam: Vec, a: Vec) -> ExtendedPairReport:
    """Conditions for D = phi + lambda(.)e to extend (phi, a) through a cocycle:

        lambda(a) = 0,
        lambda(x.y) = -theta(phi(x), y) - theta(phi(y), x),
        theta(a, x) = -2 lambda(phi(x)).
    """
    n = alg.dim
    if theta != tuple(tuple(theta[j][i] for j in range(n)) for i in range(n)):
        raise ValueError("theta must be symmetric")
    admissible = check_admissible_pair(alg, AdmissiblePair(phi, a))
    lam_a = sum((lam[k] * a[k] for k in range(n)), ZERO) == 0
    phi_cols = [mat_vec(phi, alg.basis_vector(i)) for i in range(1, n + 1)]
    products_ok = True
    for i in range(n):
        for j in range(i, n):
            prod = alg.table[i][j]
            lhs = sum((lam[k] * prod[k] for k in range(n)), ZERO)
            rhs = -bilinear(theta, phi_cols[i], alg.basis_vector(j + 1)) - bilinear(
                theta, phi_cols[j], alg.basis_vector(i + 1)
            )
            if lhs != rhs:
                products_ok = False
                break
        if not products_ok:
            break
    theta_ok = True
    for i in range(n):
        lhs = bilinear(theta, a, alg.basis_vector(i + 1))
        rhs = -2 * sum((lam[k] * phi_cols[i][k] for k in range(n)), ZERO)
        if lhs != rhs:
            theta_ok = False
            break
    return ExtendedPairReport(admissible, lam_a, products_ok, theta_ok)
