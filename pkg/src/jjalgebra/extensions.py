"""Extension constructions: central and double extensions, suspension, the
correspondence between symplectic and cosymplectic structures, and the
odd-dimensional example family.

Basis ordering is pinned: double extensions come out as (d, base..., e),
with d at index 1 and e at index dim; the correspondence construction
instead appends the Reeb direction last, as (base..., xi), so that the
catalog presentations (alpha = e^dim) are reproduced literally.  The
decomposition verifier accepts any placement via explicit indices and is
insensitive to the sign convention on the d-e block of the extended form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Algebra, is_jacobi_jordan, multiply, trivial_algebra
from .exact_core import (
    Mat,
    Vec,
    ONE,
    ZERO,
    is_zero_mat,
    is_zero_vec,
    mat_mul,
    mat_vec,
    rat,
    unit_vec,
    zero_vec,
)
from .forms import (
    SKEW,
    SYMMETRIC,
    BilinearForm,
    CosymplecticStructure,
    alpha_is_closed,
    covector,
    is_cosymplectic,
    is_symplectic,
    omega_phi,
    self_adjoint_wrt,
)
from .induced import RestrictedStructure, restrict_structure
from .operators import (
    AdmissiblePair,
    check_admissible_pair,
    check_extended_pair,
    is_anti_derivation,
)


class ExtensionError(ValueError):
    """A builder precondition failed; `condition` names the first failure."""

    def __init__(self, condition: str, message: str):
        super().__init__(f"{condition}: {message}")
        self.condition = condition


@dataclass(frozen=True)
class ExtensionDatum:
    """Input bundle for the double-extension builders."""

    theta: BilinearForm | None = None
    phi: Mat | None = None
    lam: Vec | None = None
    a: Vec | None = None
    t: Fraction = ZERO


@dataclass(frozen=True)
class ExtensionResult:
    structure: CosymplecticStructure
    d_index: int  # 1-based position of the extending derivation direction
    e_index: int  # 1-based position of the central direction
    base_indices: tuple[int, ...]


def central_extension(a: Algebra, theta: BilinearForm) -> Algebra:
    """One higher dimension, product x.y + theta(x,y) e with e central.

    theta must be a symmetric cocycle; the violating triple is reported.
    """
    if theta.symmetry != SYMMETRIC:
        raise ExtensionError("theta_symmetric", "theta must be a symmetric form")
    if theta.dim != a.dim:
        raise ExtensionError("dimension", "theta dimension does not match the algebra")
    bad = _cocycle_failure(a, theta)
    if bad is not None:
        raise ExtensionError("cocycle", f"cyclic sum of theta(x.y, z) nonzero on triple {bad}")
    n = a.dim
    table = [[zero_vec(n + 1) for _ in range(n + 1)] for _ in range(n + 1)]
    for i in range(n):
        for j in range(n):
            table[i][j] = tuple(a.table[i][j]) + (theta.matrix[i][j],)
    return Algebra(n + 1, tuple(tuple(row) for row in table), a.commutative)


def _cocycle_failure(a: Algebra, theta: BilinearForm) -> tuple[int, int, int] | None:
    for i in range(a.dim):
        for j in range(i, a.dim):
            for k in range(j, a.dim):
                total = (
                    theta(a.table[i][j], a.basis_vector(k + 1))
                    + theta(a.table[k][i], a.basis_vector(j + 1))
                    + theta(a.table[j][k], a.basis_vector(i + 1))
                )
                if total != 0:
                    return (i + 1, j + 1, k + 1)
    return None


def _split_extended_map(a: Algebra, d_map: Mat) -> tuple[Mat, Vec]:
    """Decompose a map on base+central into (phi on base, lambda row); the
    central direction must be annihilated."""
    n = a.dim
    if len(d_map) != n + 1 or any(len(row) != n + 1 for row in d_map):
        raise ExtensionError("map_shape", "D must act on the centrally extended space")
    if any(d_map[r][n] != 0 for r in range(n + 1)):
        raise ExtensionError("central_annihilated", "D must annihilate the central direction")
    phi = tuple(tuple(d_map[r][c] for c in range(n)) for r in range(n))
    lam = tuple(d_map[n][c] for c in range(n))
    return phi, lam


def assemble_extended_map(phi: Mat, lam: Vec) -> Mat:
    """Pack phi and lambda into the map phi + lambda(.)e on base+central."""
    n = len(lam)
    rows = [tuple(phi[r]) + (ZERO,) for r in range(n)]
    rows.append(tuple(lam) + (ZERO,))
    return tuple(rows)


def jj_double_extension(a: Algebra, theta: BilinearForm, d_map: Mat, sq: Vec) -> Algebra:
    """Two higher dimensions, basis (d, base..., e), product

        x.y = x.y + theta(x,y) e,  d.x = D(x),  d.d = sq,

    valid exactly when (phi, sq) is an admissible pair compatible with
    (theta, lambda); the first failing condition is raised by name.
    """
    if theta.symmetry != SYMMETRIC:
        raise ExtensionError("theta_symmetric", "theta must be a symmetric form")
    if _cocycle_failure(a, theta) is not None:
        raise ExtensionError("cocycle", "theta is not a cocycle")
    phi, lam = _split_extended_map(a, d_map)
    report = check_extended_pair(a, theta.matrix, phi, lam, sq)
    if not report.ok:
        raise ExtensionError(report.first_failure(), "extended-pair condition failed")
    out = _double_extension_table(a, theta, phi, lam, sq)
    if not is_jacobi_jordan(out):
        raise ExtensionError("jacobi", "resulting product is not Jacobi-Jordan")
    return out


def _double_extension_table(a: Algebra, theta: BilinearForm, phi: Mat, lam: Vec, sq: Vec) -> Algebra:
    """Assemble the (d, base..., e) product table without validating it."""
    n = a.dim
    dim = n + 2
    table = [[zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            table[i + 1][j + 1] = (ZERO,) + tuple(a.table[i][j]) + (theta.matrix[i][j],)
    for i in range(n):
        img = (ZERO,) + tuple(mat_vec(phi, a.basis_vector(i + 1))) + (lam[i],)
        table[0][i + 1] = img
        table[i + 1][0] = img
    table[0][0] = (ZERO,) + tuple(sq) + (ZERO,)
    return Algebra(dim, tuple(tuple(row) for row in table), True)


def _extended_omega(omega: BilinearForm) -> BilinearForm:
    """omega + d* ^ e* on (d, base..., e): block omega inside, omega(d, e) = 1."""
    n = omega.dim
    dim = n + 2
    rows = [[ZERO] * dim for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            rows[i + 1][j + 1] = omega.matrix[i][j]
    rows[0][dim - 1] = ONE
    rows[dim - 1][0] = -ONE
    return BilinearForm(tuple(tuple(r) for r in rows), SKEW)


def symplectic_double_extension(
    a: Algebra, omega: BilinearForm, phi: Mat, sq: Vec
) -> tuple[Algebra, BilinearForm]:
    """Symplectic double extension by an admissible pair: basis (d, base..., e),
    theta = omega_phi, lambda = omega(sq, .)/2, extended form omega + d* ^ e*."""
    if not is_symplectic(a, omega):
        raise ExtensionError("symplectic_base", "base structure is not symplectic")
    pair_report = check_admissible_pair(a, AdmissiblePair(phi, sq))
    if not pair_report.ok:
        raise ExtensionError(pair_report.first_failure(), "admissible-pair condition failed")
    for c in range(a.dim):
        if omega(mat_vec(phi, a.basis_vector(c + 1)), sq) != 0:
            raise ExtensionError("omega_phi_a", "omega(phi(x), a) must vanish")
    theta = omega_phi(omega, phi)
    lam = tuple(omega(sq, a.basis_vector(j + 1)) / 2 for j in range(a.dim))
    algebra = jj_double_extension(a, theta, assemble_extended_map(phi, lam), sq)
    omega_ext = _extended_omega(omega)
    if not is_symplectic(algebra, omega_ext):
        raise ExtensionError("symplectic_result", "extension failed the symplectic predicate")
    return algebra, omega_ext


def _extended_alpha(alpha: Vec, t: Fraction, alpha_e: Fraction) -> Vec:
    return (rat(t),) + tuple(alpha) + (alpha_e,)


def cosymplectic_double_extension_case1(
    s: CosymplecticStructure, phi: Mat, sq: Vec, t=ZERO
) -> ExtensionResult:
    """Double extension with extended 1-form vanishing on the central direction:

        theta = omega_phi, lambda = omega(a, .)/2,
        alpha~ = alpha with alpha~(d) = t, alpha~(e) = 0,
        omega~ = omega + d* ^ e*.

    Requires (phi, a) admissible, alpha o phi = 0, alpha(a) = 0 and
    omega(phi(x), a) = 0; the result is verified cosymplectic exactly.
    """
    a = s.algebra
    pair_report = check_admissible_pair(a, AdmissiblePair(phi, sq))
    if not pair_report.ok:
        raise ExtensionError(pair_report.first_failure(), "admissible-pair condition failed")
    n = a.dim
    for c in range(n):
        img = mat_vec(phi, a.basis_vector(c + 1))
        if sum((s.alpha[k] * img[k] for k in range(n)), ZERO) != 0:
            raise ExtensionError("alpha_phi", "alpha o phi must vanish")
    if sum((s.alpha[k] * sq[k] for k in range(n)), ZERO) != 0:
        raise ExtensionError("alpha_a", "alpha(a) must vanish")
    for c in range(n):
        if s.omega(mat_vec(phi, a.basis_vector(c + 1)), sq) != 0:
            raise ExtensionError("omega_phi_a", "omega(phi(x), a) must vanish")
    theta = omega_phi(s.omega, phi)
    lam = tuple(s.omega(sq, a.basis_vector(j + 1)) / 2 for j in range(n))
    pair = check_extended_pair(a, theta.matrix, phi, lam, sq)
    if not pair.ok:
        raise ExtensionError(pair.first_failure(), "compatibility system failed")
    algebra = jj_double_extension(a, theta, assemble_extended_map(phi, lam), sq)
    alpha_ext = _extended_alpha(s.alpha, t, ZERO)
    omega_ext = _extended_omega(s.omega)
    structure = CosymplecticStructure.build(algebra, alpha_ext, omega_ext)
    return ExtensionResult(structure, 1, algebra.dim, tuple(range(2, algebra.dim)))


def cosymplectic_double_extension_case2(
    s: CosymplecticStructure, phi: Mat, sq: Vec, t=ZERO
) -> ExtensionResult:
    """Double extension with alpha~(e) = 1, forcing theta = 0:

        x.y = x.y,  d.x = phi(x) + omega(a,x)/2 e,  d.d = a,
        alpha~ = alpha with alpha~(d) = t, alpha~(e) = 1,
        omega~ = omega + d* ^ e*.

    Requires (phi, a) admissible, omega_phi = 0 (phi self-adjoint),
    alpha(a) = 0 and omega(a, .)/2 = -alpha o phi as linear forms.
    """
    a = s.algebra
    pair_report = check_admissible_pair(a, AdmissiblePair(phi, sq))
    if not pair_report.ok:
        raise ExtensionError(pair_report.first_failure(), "admissible-pair condition failed")
    n = a.dim
    if not is_zero_mat(omega_phi(s.omega, phi).matrix):
        raise ExtensionError("omega_phi_zero", "phi must be self-adjoint for omega")
    if sum((s.alpha[k] * sq[k] for k in range(n)), ZERO) != 0:
        raise ExtensionError("alpha_a", "alpha(a) must vanish")
    lam = tuple(s.omega(sq, a.basis_vector(j + 1)) / 2 for j in range(n))
    for c in range(n):
        img = mat_vec(phi, a.basis_vector(c + 1))
        if lam[c] != -sum((s.alpha[k] * img[k] for k in range(n)), ZERO):
            raise ExtensionError("lambda_matches", "omega(a,.)/2 must equal -alpha o phi")
    theta = BilinearForm(tuple((ZERO,) * n for _ in range(n)), SYMMETRIC)
    algebra = jj_double_extension(a, theta, assemble_extended_map(phi, lam), sq)
    alpha_ext = _extended_alpha(s.alpha, t, ONE)
    omega_ext = _extended_omega(s.omega)
    structure = CosymplecticStructure.build(algebra, alpha_ext, omega_ext)
    return ExtensionResult(structure, 1, algebra.dim, tuple(range(2, algebra.dim)))


# -- suspension (dimension +1 correspondence) ---------------------------------


def suspension_data(a: Algebra, alpha: Vec, omega: BilinearForm) -> tuple[Algebra, BilinearForm]:
    """Raw direct-sum algebra with the 2-form omega + alpha ^ e*; not validated.

    The pair is symplectic exactly when (a, alpha, omega) is cosymplectic,
    so the unvalidated builder is what the equivalence tests exercise.
    """
    n = a.dim
    table = [[zero_vec(n + 1) for _ in range(n + 1)] for _ in range(n + 1)]
    for i in range(n):
        for j in range(n):
            table[i][j] = tuple(a.table[i][j]) + (ZERO,)
    ext = Algebra(n + 1, tuple(tuple(row) for row in table), a.commutative)
    rows = [[ZERO] * (n + 1) for _ in range(n + 1)]
    for i in range(n):
        for j in range(n):
            rows[i][j] = omega.matrix[i][j]
        rows[i][n] = alpha[i]
        rows[n][i] = -alpha[i]
    return ext, BilinearForm(tuple(tuple(r) for r in rows), SKEW)


def suspension(s: CosymplecticStructure) -> tuple[Algebra, BilinearForm]:
    """Direct sum with a central null line e, carrying omega + alpha ^ e*."""
    ext, omega_ext = suspension_data(s.algebra, s.alpha, s.omega)
    if not is_symplectic(ext, omega_ext):
        raise ExtensionError("symplectic_result", "suspension failed the symplectic predicate")
    return ext, omega_ext


def unsuspend(
    ext: Algebra, omega_ext: BilinearForm, alpha: Vec, omega: BilinearForm
) -> CosymplecticStructure:
    """Inverse of suspension for an explicitly decomposed 2-form.

    Checks that omega_ext = omega + alpha ^ e* exactly (e the last basis
    direction), that e is central and null, that (ext, omega_ext) is
    symplectic, and returns the verified base structure.
    """
    n = ext.dim - 1
    if len(alpha) != n or omega.dim != n:
        raise ExtensionError("dimension", "alpha/omega must live on the base")
    expected_alg, expected_form = suspension_data(
        Algebra(n, tuple(tuple(ext.table[i][j][:n] for j in range(n)) for i in range(n)), ext.commutative),
        alpha,
        omega,
    )
    for i in range(ext.dim):
        if not is_zero_vec(ext.table[i][n]) or not is_zero_vec(ext.table[n][i]):
            raise ExtensionError("central_line", "the last direction must act trivially")
    for i in range(n):
        for j in range(n):
            if ext.table[i][j][n] != 0:
                raise ExtensionError("central_line", "base products must stay in the base")
    if expected_alg.table != ext.table:
        raise ExtensionError("decomposition", "algebra is not base (+) central line")
    if expected_form.matrix != omega_ext.matrix:
        raise ExtensionError("decomposition", "omega_ext is not omega + alpha ^ e*")
    if not is_symplectic(ext, omega_ext):
        raise ExtensionError("symplectic_input", "suspended pair is not symplectic")
    base = Algebra(n, tuple(tuple(ext.table[i][j][:n] for j in range(n)) for i in range(n)), ext.commutative)
    return CosymplecticStructure.build(base, alpha, omega)


# -- dimension +/- 1 correspondence with a two-step nilpotent anti-derivation --


def cosymplectic_from_symplectic(h: Algebra, omega_h: BilinearForm, d: Mat) -> CosymplecticStructure:
    """Adjoin a Reeb direction xi (appended last) acting by the anti-derivation d.

    Requires (h, omega_h) symplectic, d in Ader(h), d^2 = 0, and d
    self-adjoint for omega_h; the result is verified cosymplectic.
    """
    if not is_symplectic(h, omega_h):
        raise ExtensionError("symplectic_base", "base structure is not symplectic")
    if not is_anti_derivation(h, d):
        raise ExtensionError("anti_derivation", "d is not an anti-derivation")
    if not is_zero_mat(mat_mul(d, d)):
        raise ExtensionError("square_zero", "d^2 must vanish")
    if not self_adjoint_wrt(omega_h, d):
        raise ExtensionError("self_adjoint", "d must be self-adjoint for omega_h")
    n = h.dim
    dim = n + 1
    table = [[zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            table[i][j] = tuple(h.table[i][j]) + (ZERO,)
    for i in range(n):
        img = tuple(mat_vec(d, h.basis_vector(i + 1))) + (ZERO,)
        table[n][i] = img
        table[i][n] = img
    algebra = Algebra(dim, tuple(tuple(row) for row in table), True)
    if not is_jacobi_jordan(algebra):
        raise ExtensionError("jacobi", "adjoined product is not Jacobi-Jordan")
    rows = [[ZERO] * dim for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            rows[i][j] = omega_h.matrix[i][j]
    omega = BilinearForm(tuple(tuple(r) for r in rows), SKEW)
    alpha = covector(dim, {dim: 1})
    return CosymplecticStructure.build(algebra, alpha, omega)


@dataclass(frozen=True)
class SymplecticReduction:
    """ker(alpha) with its restricted form and the Reeb multiplication."""

    algebra: Algebra
    omega_h: BilinearForm
    d: Mat
    restricted: RestrictedStructure


def symplectic_from_cosymplectic(s: CosymplecticStructure) -> SymplecticReduction:
    """Restrict to h = ker(alpha), with d the Reeb multiplication on h.

    Postconditions are verified: (h, omega_h) symplectic, d an
    anti-derivation with d^2 = 0, self-adjoint for omega_h.
    """
    restricted = restrict_structure(s)
    h_alg, omega_h = restricted.algebra, restricted.omega_h
    k = h_alg.dim
    cols = []
    for j in range(k):
        img = multiply(s.algebra, s.reeb, restricted.h_basis[j])
        cols.append(restricted.coords(img))
    d = tuple(tuple(cols[j][r] for j in range(k)) for r in range(k))
    if not is_symplectic(h_alg, omega_h):
        raise ExtensionError("symplectic_result", "restriction is not symplectic")
    if not is_anti_derivation(h_alg, d):
        raise ExtensionError("anti_derivation", "Reeb multiplication is not an anti-derivation")
    if not is_zero_mat(mat_mul(d, d)):
        raise ExtensionError("square_zero", "Reeb multiplication does not square to zero")
    if not self_adjoint_wrt(omega_h, d):
        raise ExtensionError("self_adjoint", "Reeb multiplication is not self-adjoint")
    return SymplecticReduction(h_alg, omega_h, d, restricted)


# -- odd-dimensional example family -------------------------------------------


def odd_family(n: int, phis, as_) -> ExtensionResult:
    """Nontrivial cosymplectic structure in dimension 2n+3 built over the
    trivial base with alpha = e^{2n+1}, omega = sum e^{i,i+n}.

    Presentation: base indices 1..2n+1, central direction e = e_{2n+2},
    extending direction d = e_{2n+3}, extended form
    omega~ = sum_i e^{i,i+n} + e^{2n+2,2n+3}.  Requires the compatibility
    equations phi_{n+i} a_i = phi_i a_{n+i} (the failing index is named).
    The builder verifies the result cosymplectic, exactly.
    """
    if n < 1:
        raise ValueError("n must be positive")
    phis = tuple(rat(p) for p in phis)
    avals = tuple(rat(x) for x in as_)
    if len(phis) != 2 * n or len(avals) != 2 * n:
        raise ValueError(f"need 2n = {2*n} parameters for phi and a")
    for i in range(1, n + 1):
        if phis[n + i - 1] * avals[i - 1] != phis[i - 1] * avals[n + i - 1]:
            raise ExtensionError(
                "compatibility",
                f"phi_{n+i} a_{i} != phi_{i} a_{n+i} at index i={i}",
            )
    dim = 2 * n + 3
    base, e_idx, d_idx = 2 * n + 1, 2 * n + 2, 2 * n + 3  # 1-based
    half = Fraction(1, 2)
    table = [[zero_vec(dim) for _ in range(dim)] for _ in range(dim)]

    def put(i: int, j: int, v: Vec):
        table[i - 1][j - 1] = v
        table[j - 1][i - 1] = v

    for i in range(1, n + 1):
        put(base, i, tuple(-phis[n + i - 1] * c for c in unit_vec(dim, e_idx)))
        put(base, n + i, tuple(phis[i - 1] * c for c in unit_vec(dim, e_idx)))
        put(d_idx, i, tuple(half * avals[n + i - 1] * c for c in unit_vec(dim, e_idx)))
        put(d_idx, n + i, tuple(-half * avals[i - 1] * c for c in unit_vec(dim, e_idx)))
    put(d_idx, base, tuple(-phis[k] if k < 2 * n else ZERO for k in range(dim)))
    put(d_idx, d_idx, tuple(avals[k] if k < 2 * n else ZERO for k in range(dim)))
    algebra = Algebra(dim, tuple(tuple(row) for row in table), True)
    alpha = covector(dim, {base: 1})
    omega = {(i, i + n): 1 for i in range(1, n + 1)}
    omega[(e_idx, d_idx)] = 1
    from .forms import skew_form

    structure = CosymplecticStructure.build(algebra, alpha, skew_form(dim, omega))
    return ExtensionResult(structure, d_idx, e_idx, tuple(range(1, base + 1)))


# -- decomposition verifier ----------------------------------------------------


@dataclass(frozen=True)
class DecompositionReport:
    """Named checks for a claimed presentation J~ = <d> (+) base (+) <e>."""

    checks: tuple[tuple[str, bool], ...]
    extracted: dict | None

    @property
    def ok(self) -> bool:
        return all(flag for _, flag in self.checks)

    def first_failure(self) -> str | None:
        for name, flag in self.checks:
            if not flag:
                return name
        return None


def verify_double_extension_decomposition(
    s: CosymplecticStructure, d_index: int, e_index: int, base_indices
) -> DecompositionReport:
    """Check that the given index split presents s as a cosymplectic double
    extension: e central and null, products of base vectors staying in
    base + <e>, the d-row encoding (phi, lambda, a), the extended forms in
    block shape, and the compatibility systems for the extracted datum.

    The d-e pairing omega~(d, e) =: s may be any nonzero scalar; the
    extracted conditions are theta = omega_phi / s and
    lambda = omega(a, .) / (2 s).
    """
    alg = s.algebra
    dim = alg.dim
    base_indices = tuple(base_indices)
    checks: list[tuple[str, bool]] = []

    def record(name: str, flag: bool) -> bool:
        checks.append((name, flag))
        return flag

    partition_ok = sorted((d_index, e_index) + base_indices) == list(range(1, dim + 1))
    if not record("index_partition", partition_ok):
        return DecompositionReport(tuple(checks), None)
    d0, e0 = d_index - 1, e_index - 1
    b0 = [i - 1 for i in base_indices]

    e_null = all(is_zero_vec(alg.table[e0][j]) for j in range(dim))
    if not record("e_central_null", e_null):
        return DecompositionReport(tuple(checks), None)

    n = len(b0)
    base_ok = True
    base_table = [[zero_vec(n) for _ in range(n)] for _ in range(n)]
    theta_rows = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            prod = alg.table[b0[i]][b0[j]]
            if prod[d0] != 0:
                base_ok = False
            base_table[i][j] = tuple(prod[b] for b in b0)
            theta_rows[i][j] = prod[e0]
    if not record("base_products_stay", base_ok):
        return DecompositionReport(tuple(checks), None)
    base_alg = Algebra(n, tuple(tuple(r) for r in base_table), True)
    theta = BilinearForm(tuple(tuple(r) for r in theta_rows), SYMMETRIC)

    d_ok = True
    phi_cols = []
    lam = []
    for j in range(n):
        img = alg.table[d0][b0[j]]
        if img[d0] != 0:
            d_ok = False
        phi_cols.append(tuple(img[b] for b in b0))
        lam.append(img[e0])
    sq_full = alg.table[d0][d0]
    if sq_full[d0] != 0 or sq_full[e0] != 0:
        d_ok = False
    sq = tuple(sq_full[b] for b in b0)
    if not record("d_row_shape", d_ok):
        return DecompositionReport(tuple(checks), None)
    phi = tuple(tuple(phi_cols[j][r] for j in range(n)) for r in range(n))
    lam = tuple(lam)

    alpha = tuple(s.alpha[b] for b in b0)
    alpha_d, alpha_e = s.alpha[d0], s.alpha[e0]
    pairing = s.omega.matrix[d0][e0]
    form_ok = pairing != 0
    for b in b0:
        if s.omega.matrix[d0][b] != 0 or s.omega.matrix[e0][b] != 0:
            form_ok = False
    if not record("form_block_shape", form_ok):
        return DecompositionReport(tuple(checks), None)
    omega_rows = tuple(tuple(s.omega.matrix[bi][bj] for bj in b0) for bi in b0)
    omega_base = BilinearForm(omega_rows, SKEW)

    record("theta_matches_omega_phi", _scaled_eq(omega_phi(omega_base, phi).matrix, theta.matrix, pairing))
    lam_expected = tuple(omega_base(sq, base_alg.basis_vector(j + 1)) / (2 * pairing) for j in range(n))
    record("lambda_matches_omega_a", lam == lam_expected)
    pair = check_admissible_pair(base_alg, AdmissiblePair(phi, sq))
    record("admissible_pair", pair.ok)
    theta_alpha_e = all(
        theta.matrix[i][j] * alpha_e == 0 for i in range(n) for j in range(n)
    )
    record("theta_kills_alpha_e", theta_alpha_e)
    alpha_phi_ok = all(
        sum((alpha[k] * phi_cols[j][k] for k in range(n)), ZERO) + lam[j] * alpha_e == 0
        for j in range(n)
    )
    record("alpha_phi_lambda", alpha_phi_ok)
    record("alpha_a", sum((alpha[k] * sq[k] for k in range(n)), ZERO) == 0)
    base_diag = is_cosymplectic(base_alg, alpha, omega_base)
    record("base_cosymplectic", base_diag.ok)
    extracted = {
        "base": base_alg,
        "alpha": alpha,
        "omega": omega_base,
        "theta": theta,
        "phi": phi,
        "lambda": lam,
        "a": sq,
        "pairing": pairing,
        "alpha_d": alpha_d,
        "alpha_e": alpha_e,
    }
    return DecompositionReport(tuple(checks), extracted)


def _scaled_eq(m: Mat, target: Mat, scale: Fraction) -> bool:
    """target == m / scale entry-wise."""
    n = len(m)
    return all(m[i][j] == target[i][j] * scale for i in range(n) for j in range(n))


def find_double_extension_decomposition(s: CosymplecticStructure):
    """Best-effort search for a presentation as a double extension.

    Enumerates central null candidates for e (center intersected with
    ker(alpha), then the full center), picks the d-direction dual to e
    under the extended form, rotates to an adapted basis, and runs the
    verifier.  Returns (transport matrix, report) for the first success,
    or None; failure to find one proves nothing.
    """
    from .algebra import center, transport_algebra
    from .exact_core import identity, invert, kernel_basis, mat_from_cols, solve_linear

    alg = s.algebra
    dim = alg.dim
    central = center(alg)
    if not central:
        return None
    alpha_row = (s.alpha,)
    candidates: list[Vec] = []
    stacked = tuple(mat_from_cols(tuple(central)))
    in_ker_alpha = [v for v in central if sum((s.alpha[k] * v[k] for k in range(dim)), ZERO) == 0]
    candidates.extend(in_ker_alpha)
    candidates.extend(v for v in central if v not in in_ker_alpha)
    for e_vec in candidates:
        omega_e = mat_vec(s.omega.matrix, e_vec)
        if is_zero_vec(omega_e):
            continue  # e may not lie in the radical of the extended form
        d_vec = solve_linear((omega_e,), (ONE,))
        if d_vec is None:
            continue
        # base: omega-orthogonal to both e and d
        omega_d = mat_vec(s.omega.matrix, d_vec)
        base_vectors = kernel_basis((omega_e, omega_d))
        cols = [d_vec] + base_vectors + [e_vec]
        if len(cols) != dim:
            continue
        t = mat_from_cols(tuple(cols))
        try:
            t_inv = invert(t)
        except ValueError:
            continue
        rotated_alg = transport_algebra(alg, t_inv)
        rotated_alpha = tuple(
            sum((s.alpha[k] * t[k][j] for k in range(dim)), ZERO) for j in range(dim)
        )
        rotated_omega = BilinearForm(
            tuple(
                tuple(s.omega(cols[i], cols[j]) for j in range(dim)) for i in range(dim)
            ),
            SKEW,
        )
        diag = is_cosymplectic(rotated_alg, rotated_alpha, rotated_omega)
        if not diag.ok:
            continue
        rotated = CosymplecticStructure.build(rotated_alg, rotated_alpha, rotated_omega)
        report = verify_double_extension_decomposition(rotated, 1, dim, tuple(range(2, dim)))
        if report.ok:
            return t, report
    return None
