"""Exact rational linear algebra over immutable tuples.

Scalars are ``fractions.Fraction`` (always in lowest terms, positive
denominator, arbitrary precision).  Vectors are tuples of Fractions and
matrices are tuples of row tuples, so every value is hashable and safe to
share between threads.  All pivoting is deterministic: leftmost column
first, then lowest row index, so solution bases are reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Sequence

QQ = Fraction

Vec = tuple[Fraction, ...]
Mat = tuple[tuple[Fraction, ...], ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(value) -> Fraction:
    """Coerce an int, string like ``-3/7``, or Fraction to an exact scalar."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {value!r}") from None
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rat_str(value: Fraction) -> str:
    """Serialize as ``p/q``, or ``p`` when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def vec(entries: Iterable) -> Vec:
    return tuple(rat(x) for x in entries)


def zero_vec(n: int) -> Vec:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vec:
    """Standard basis vector e_i, 1-based as in the e_1..e_n notation."""
    if not 1 <= i <= n:
        raise ValueError(f"basis index {i} out of range 1..{n}")
    return tuple(ONE if k == i - 1 else ZERO for k in range(n))


def vec_add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c: Fraction, v: Vec) -> Vec:
    return tuple(c * a for a in v)


def is_zero_vec(v: Vec) -> bool:
    return all(a == 0 for a in v)


def mat(rows: Iterable[Iterable]) -> Mat:
    out = tuple(vec(row) for row in rows)
    if out and any(len(row) != len(out[0]) for row in out):
        raise ValueError("ragged rows in matrix")
    return out


def zero_mat(nrows: int, ncols: int) -> Mat:
    return tuple((ZERO,) * ncols for _ in range(nrows))


def identity(n: int) -> Mat:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def transpose(m: Mat) -> Mat:
    return tuple(zip(*m)) if m else ()


def mat_vec(m: Mat, v: Vec) -> Vec:
    if m and len(m[0]) != len(v):
        raise ValueError(f"matrix has {len(m[0])} columns, vector has {len(v)} entries")
    return tuple(sum((row[j] * v[j] for j in range(len(v))), ZERO) for row in m)


def mat_mul(a: Mat, b: Mat) -> Mat:
    if a and b and len(a[0]) != len(b):
        raise ValueError("inner dimensions do not match")
    bt = transpose(b)
    return tuple(tuple(sum((ra[k] * cb[k] for k in range(len(ra))), ZERO) for cb in bt) for ra in a)


def mat_add(a: Mat, b: Mat) -> Mat:
    return tuple(vec_add(ra, rb) for ra, rb in zip(a, b, strict=True))


def mat_scale(c: Fraction, m: Mat) -> Mat:
    return tuple(vec_scale(c, row) for row in m)


def mat_from_cols(cols: Sequence[Vec]) -> Mat:
    return transpose(tuple(cols))


def mat_cols(m: Mat) -> tuple[Vec, ...]:
    return transpose(m)


def is_zero_mat(m: Mat) -> bool:
    return all(is_zero_vec(row) for row in m)


def bilinear(m: Mat, u: Vec, v: Vec) -> Fraction:
    """Evaluate u^T m v."""
    total = ZERO
    for i, ui in enumerate(u):
        if ui == 0:
            continue
        row = m[i]
        total += ui * sum((row[j] * v[j] for j in range(len(v)) if v[j] != 0), ZERO)
    return total


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rref(m: Mat) -> tuple[Mat, tuple[int, ...]]:
    rows, pivots = _rref([list(row) for row in m])
    return tuple(tuple(row) for row in rows), tuple(pivots)


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def solve_linear(a: Mat, b: Vec) -> Optional[Vec]:
    """Solve a.x = b; free variables are set to zero; None when inconsistent."""
    if len(a) != len(b):
        raise ValueError(f"matrix has {len(a)} rows, rhs has {len(b)} entries")
    ncols = len(a[0]) if a else 0
    rows, pivots = _rref([list(row) + [bi] for row, bi in zip(a, b)])
    if ncols in pivots:
        return None  # pivot in the augmented column
    x = [ZERO] * ncols
    for r, c in enumerate(pivots):
        x[c] = rows[r][ncols]
    return tuple(x)


def kernel_basis(m: Mat) -> list[Vec]:
    """Null-space basis in reduced form, one vector per free column.

    The vector for free column f has entry 1 at f and -R[r][f] at each
    pivot column; vectors are ordered by ascending free column.
    """
    ncols = len(m[0]) if m else 0
    rows, pivots = _rref([list(row) for row in m])
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for r, c in enumerate(pivots):
            v[c] = -rows[r][f]
        basis.append(tuple(v))
    return basis


def row_space_basis(vectors: Sequence[Vec]) -> list[Vec]:
    """Deterministic reduced basis of the span of the given vectors."""
    if not vectors:
        return []
    rows, pivots = _rref([list(v) for v in vectors])
    return [tuple(rows[r]) for r in range(len(pivots))]


def in_span(vectors: Sequence[Vec], v: Vec) -> bool:
    if is_zero_vec(v):
        return True
    if not vectors:
        return False
    return solve_linear(mat_from_cols(tuple(vectors)), v) is not None


def determinant(m: Mat) -> Fraction:
    """Exact determinant via fraction-free (Bareiss) elimination.

    Rows are first scaled to integers; the scaling is divided back out.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return ONE
    scale = ONE
    a: list[list[int]] = []
    for row in m:
        d = lcm(*(x.denominator for x in row))
        scale *= d
        a.append([int(x * d) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1]) / scale


def invert(m: Mat) -> Mat:
    n = len(m)
    cols = []
    for i in range(1, n + 1):
        col = solve_linear(m, unit_vec(n, i))
        if col is None or not is_zero_vec(vec_sub(mat_vec(m, col), unit_vec(n, i))):
            raise ValueError("matrix is singular")
        cols.append(col)
    return mat_from_cols(cols)


def is_invertible(m: Mat) -> bool:
    return len(m) > 0 and len(m) == len(m[0]) and determinant(m) != 0


# -- top-form evaluation ------------------------------------------------------

ALTERNATING_SUM_MAX_DIM = 11  # (dim)! blow-up; beyond this use the Psi determinant


def _pair_sum(indices: list[int], omega: Mat) -> Fraction:
    """Pfaffian-style alternating sum over perfect matchings of `indices`."""
    if not indices:
        return ONE
    first, rest = indices[0], indices[1:]
    total = ZERO
    for pos, j in enumerate(rest):
        w = omega[first][j]
        if w == 0:
            continue
        remaining = rest[:pos] + rest[pos + 1 :]
        term = w * _pair_sum(remaining, omega)
        if pos % 2 == 1:
            term = -term
        total += term
    return total


def alternating_sum_top(alpha: Vec, omega: Mat, dim: int) -> Fraction:
    """Unnormalized alternating sum detecting whether alpha wedge omega^n is zero.

    Returns sum over all permutations s of 1..dim of
    sign(s) * alpha(e_s(1)) * prod_i omega(e_s(2i), e_s(2i+1)),
    computed by factoring the permutations through perfect matchings
    (each matching is hit n! * 2^n times with equal signed value).
    """
    if dim % 2 == 0:
        raise ValueError("top form alpha ^ omega^n needs odd dimension")
    if dim > ALTERNATING_SUM_MAX_DIM:
        raise ValueError(
            f"alternating sum limited to dimension {ALTERNATING_SUM_MAX_DIM}; "
            "use the Psi-matrix determinant instead"
        )
    if len(alpha) != dim or len(omega) != dim:
        raise ValueError("alpha/omega dimension mismatch")
    n = (dim - 1) // 2
    weight = Fraction(2**n * _factorial(n))
    total = ZERO
    for i in range(dim):
        if alpha[i] == 0:
            continue
        rest = [k for k in range(dim) if k != i]
        term = alpha[i] * _pair_sum(rest, omega)
        if i % 2 == 1:
            term = -term
        total += term
    return weight * total


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out
