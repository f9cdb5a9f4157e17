"""Randomized but exact test-data generation.

Admissible pairs and extension data satisfy nonlinear conditions in
general; the samplers here follow the linear-slice strategy: draw the
map phi from the relevant linear solution space (anti-derivations, plus
any linear side conditions), then solve the remaining conditions, which
are linear in the vector a, exactly.  Every sampler takes an explicit
random.Random so suites are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import Algebra
from .exact_core import (
    Mat,
    Vec,
    ONE,
    ZERO,
    identity,
    is_zero_vec,
    kernel_basis,
    mat_vec,
    solve_linear,
    unit_vec,
    vec_add,
    vec_scale,
    zero_vec,
)
from .forms import BilinearForm, CosymplecticStructure, SKEW, SYMMETRIC
from .operators import ader_space


def random_fraction(rng: random.Random, span: int = 3, den: int = 2) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_vec(rng: random.Random, n: int, span: int = 3) -> Vec:
    return tuple(Fraction(rng.randint(-span, span)) for _ in range(n))


def random_invertible(rng: random.Random, n: int, moves: int = 12) -> Mat:
    """Product of elementary row operations; always invertible."""
    rows = [list(row) for row in identity(n)]
    for _ in range(moves):
        kind = rng.randrange(3)
        i, j = rng.randrange(n), rng.randrange(n)
        if kind == 0 and i != j:
            c = random_fraction(rng)
            rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
        elif kind == 1:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            c = rng.choice([Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3)])
            rows[i] = [c * x for x in rows[i]]
    return tuple(tuple(r) for r in rows)


def random_algebra(rng: random.Random, dim: int, commutative: bool = False, density: float = 0.4) -> Algebra:
    table = [[zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
    for i in range(dim):
        js = range(i, dim) if commutative else range(dim)
        for j in js:
            if rng.random() < density:
                entry = tuple(
                    Fraction(rng.randint(-2, 2)) if rng.random() < 0.5 else ZERO for _ in range(dim)
                )
                table[i][j] = entry
                if commutative:
                    table[j][i] = entry
    return Algebra(dim, tuple(tuple(row) for row in table), commutative)


def _combo(rng: random.Random, basis: list, zero, scale_span: int = 2):
    out = zero
    for b in basis:
        c = Fraction(rng.randint(-scale_span, scale_span))
        if c == 0:
            continue
        out = _add_scaled(out, c, b)
    return out


def _sparse_combo(rng: random.Random, basis: list, zero, max_terms: int = 2):
    """Combination of at most max_terms basis elements; squares to zero far
    more often than a dense draw, which the admissibility solvers need."""
    if not basis:
        return zero
    out = zero
    count = rng.randint(1, min(max_terms, len(basis)))
    for b in rng.sample(basis, count):
        c = Fraction(rng.choice([-2, -1, 1, 2]))
        out = _add_scaled(out, c, b)
    return out


def _rank_one_nilpotent(rng: random.Random, n: int, u: Vec | None = None) -> Mat:
    """u w^T with w(u) = 0, so the square vanishes."""
    for _ in range(10):
        if u is None:
            cand = random_vec(rng, n, span=2)
            if is_zero_vec(cand):
                continue
        else:
            cand = u
        w_basis = kernel_basis((cand,))
        w = _combo(rng, w_basis, zero_vec(n), scale_span=2) if w_basis else zero_vec(n)
        if is_zero_vec(w):
            continue
        return tuple(tuple(cand[r] * w[c] for c in range(n)) for r in range(n))
    return tuple(zero_vec(n) for _ in range(n))


def _add_scaled(acc, c: Fraction, item):
    if isinstance(item, tuple) and item and isinstance(item[0], tuple):
        return tuple(
            tuple(a + c * x for a, x in zip(arow, irow)) for arow, irow in zip(acc, item)
        )
    return tuple(a + c * x for a, x in zip(acc, item))


def sample_cocycle(rng: random.Random, a: Algebra) -> BilinearForm:
    """Random symmetric cocycle, drawn from the exact solution space of the
    cyclic-sum system."""
    n = a.dim
    slots = [(i, j) for i in range(n) for j in range(i, n)]
    index = {pair: k for k, pair in enumerate(slots)}

    def coeff_of(i: int, j: int) -> int:
        return index[(i, j) if i <= j else (j, i)]

    rows = []
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                coeff = [ZERO] * len(slots)
                for (x, y, z) in ((i, j, k), (k, i, j), (j, k, i)):
                    prod = a.table[x][y]
                    for m in range(n):
                        if prod[m] != 0:
                            coeff[coeff_of(m, z)] += prod[m]
                if any(c != 0 for c in coeff):
                    rows.append(tuple(coeff))
    if rows:
        basis = kernel_basis(tuple(rows))
    else:
        basis = [unit_vec(len(slots), k + 1) for k in range(len(slots))]
    values = _combo(rng, basis, zero_vec(len(slots)))
    mat_rows = [[ZERO] * n for _ in range(n)]
    for (i, j), k in index.items():
        mat_rows[i][j] = values[k]
        mat_rows[j][i] = values[k]
    return BilinearForm(tuple(tuple(r) for r in mat_rows), SYMMETRIC)


def _left_mult_rows_for_a(a: Algebra) -> list[list[Fraction]]:
    """Rows of the map a_vec -> flattened L_a matrix (L_a[k][j] = sum_i a_i c_ijk)."""
    n = a.dim
    rows = []
    for k in range(n):
        for j in range(n):
            rows.append([a.table[i][j][k] for i in range(n)])
    return rows


def solve_for_square_vector(
    a: Algebra,
    phi: Mat,
    extra_rows: list[Vec] | None = None,
    extra_rhs: list[Fraction] | None = None,
) -> tuple[Vec | None, list[Vec]]:
    """Solve the linear-in-a system L_a = -2 phi^2, phi(a) = 0 plus extras.

    Returns (particular solution or None, kernel basis of the homogeneous
    part) so callers can randomize within the solution set.
    """
    n = a.dim
    phi2 = tuple(
        tuple(sum((phi[r][m] * phi[m][c] for m in range(n)), ZERO) for c in range(n))
        for r in range(n)
    )
    rows: list[Vec] = []
    rhs: list[Fraction] = []
    for (k, j), row in zip(((k, j) for k in range(n) for j in range(n)), _left_mult_rows_for_a(a)):
        rows.append(tuple(row))
        rhs.append(-2 * phi2[k][j])
    for r in range(n):
        rows.append(tuple(phi[r][c] for c in range(n)))
        rhs.append(ZERO)
    if extra_rows:
        rows.extend(extra_rows)
        rhs.extend(extra_rhs or [ZERO] * len(extra_rows))
    particular = solve_linear(tuple(rows), tuple(rhs))
    if particular is None:
        return None, []
    homogeneous = kernel_basis(tuple(rows))
    return particular, homogeneous


def sample_admissible_pair(rng: random.Random, a: Algebra, tries: int = 25) -> tuple[Mat, Vec]:
    """Random (phi, a) with phi in Ader, a in ker phi, phi^2 = -L_a/2."""
    from .operators import is_anti_derivation

    basis = ader_space(a)
    n = a.dim
    zero_phi = tuple(zero_vec(n) for _ in range(n))
    for attempt in range(tries):
        if attempt % 2 == 0:
            phi = _sparse_combo(rng, basis, zero_phi)
        else:
            phi = _rank_one_nilpotent(rng, n)
            if not is_anti_derivation(a, phi):
                continue
        particular, homogeneous = solve_for_square_vector(a, phi)
        if particular is None:
            continue
        sq = particular
        if homogeneous:
            sq = vec_add(sq, _combo(rng, homogeneous, zero_vec(n)))
        return phi, sq
    return zero_phi, zero_vec(n)


def sample_case1_data(rng: random.Random, s: CosymplecticStructure, tries: int = 30) -> tuple[Mat, Vec]:
    """Random datum for the alpha(e)=0 extension: admissible (phi, a) with
    alpha o phi = 0, alpha(a) = 0, omega(phi(x), a) = 0."""
    a = s.algebra
    n = a.dim
    zero_phi = tuple(zero_vec(n) for _ in range(n))
    alpha_rows = []
    for c in range(n):
        row = [ZERO] * (n * n)
        for r in range(n):
            row[r * n + c] = s.alpha[r]
        alpha_rows.append(tuple(row))
    basis = _restrict_matrix_space(ader_space(a), alpha_rows)
    h_basis = kernel_basis((s.alpha,))
    for attempt in range(tries):
        if attempt % 2 == 0:
            phi = _sparse_combo(rng, basis, zero_phi)
        else:
            u = _combo(rng, h_basis, zero_vec(n), scale_span=1)
            if is_zero_vec(u):
                continue
            phi = _rank_one_nilpotent(rng, n, u=u)
            if not _in_matrix_space(basis, phi):
                continue
        extra_rows = [s.alpha]
        extra_rows.extend(
            tuple(
                -sum((s.omega.matrix[r][k] * mat_vec(phi, a.basis_vector(c + 1))[r] for r in range(n)), ZERO)
                for k in range(n)
            )
            for c in range(n)
        )
        # rows above encode omega(phi(e_c), a) = sum_k omega(phi e_c, e_k)...
        particular, homogeneous = solve_for_square_vector(
            a, phi, extra_rows=extra_rows, extra_rhs=[ZERO] * len(extra_rows)
        )
        if particular is None:
            continue
        sq = particular
        if homogeneous:
            sq = vec_add(sq, _combo(rng, homogeneous, zero_vec(n)))
        return phi, sq
    return zero_phi, zero_vec(n)


def sample_case2_data(rng: random.Random, s: CosymplecticStructure, tries: int = 30) -> tuple[Mat, Vec]:
    """Random datum for the alpha(e)=1 extension: admissible (phi, a) with
    omega_phi = 0, alpha(a) = 0, omega(a, .)/2 = -alpha o phi."""
    a = s.algebra
    n = a.dim
    zero_phi = tuple(zero_vec(n) for _ in range(n))
    selfadj_rows = []
    for i in range(n):
        for j in range(n):
            row = [ZERO] * (n * n)
            for r in range(n):
                row[r * n + i] += s.omega.matrix[r][j]
                row[r * n + j] += s.omega.matrix[r][i]
            if any(c != 0 for c in row):
                selfadj_rows.append(tuple(row))
    basis = _restrict_matrix_space(ader_space(a), selfadj_rows)
    for attempt in range(tries):
        phi = _sparse_combo(rng, basis, zero_phi, max_terms=1 + attempt % 3)
        extra_rows: list[Vec] = [s.alpha]
        extra_rhs: list[Fraction] = [ZERO]
        for j in range(n):
            # omega(a, e_j) = -2 alpha(phi(e_j))
            extra_rows.append(tuple(s.omega.matrix[r][j] for r in range(n)))
            img = mat_vec(phi, a.basis_vector(j + 1))
            extra_rhs.append(-2 * sum((s.alpha[k] * img[k] for k in range(n)), ZERO))
        particular, homogeneous = solve_for_square_vector(a, phi, extra_rows, extra_rhs)
        if particular is None:
            continue
        sq = particular
        if homogeneous:
            sq = vec_add(sq, _combo(rng, homogeneous, zero_vec(n)))
        return phi, sq
    return zero_phi, zero_vec(n)


def _in_matrix_space(basis: list[Mat], m: Mat) -> bool:
    """Exact span membership for flattened matrices."""
    from .exact_core import in_span

    n = len(m)
    flat = tuple(m[r][c] for r in range(n) for c in range(n))
    vectors = [tuple(b[r][c] for r in range(n) for c in range(n)) for b in basis]
    return in_span(vectors, flat)


def _restrict_matrix_space(basis: list[Mat], constraint_rows: list[Vec]) -> list[Mat]:
    """Sub-basis of span(basis) satisfying the extra linear constraints on
    the flattened matrix entries."""
    if not basis:
        return []
    n = len(basis[0])
    if not constraint_rows:
        return basis
    # columns = coordinates in the given basis
    system = []
    for row in constraint_rows:
        system.append(
            tuple(
                sum((row[r * n + c] * b[r][c] for r in range(n) for c in range(n)), ZERO)
                for b in basis
            )
        )
    combos = kernel_basis(tuple(system))
    out = []
    for combo in combos:
        m = tuple(zero_vec(n) for _ in range(n))
        for c, b in zip(combo, basis):
            if c != 0:
                m = _add_scaled(m, c, b)
        out.append(m)
    return out


def sample_family_params(rng: random.Random, n: int) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Random (phi, a) satisfying the per-index compatibility
    phi_{n+i} a_i = phi_i a_{n+i}: each a-pair is a multiple of its phi-pair."""
    phis = [Fraction(rng.randint(-3, 3)) for _ in range(2 * n)]
    avals = [ZERO] * (2 * n)
    for i in range(n):
        c = Fraction(rng.randint(-3, 3))
        avals[i] = c * phis[i]
        avals[n + i] = c * phis[n + i]
    return tuple(phis), tuple(avals)
