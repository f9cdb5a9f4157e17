"""Structure-constant algebras and the Jacobi-Jordan axiom predicates.

An algebra is a dimension together with the products of basis vectors,
stored densely: ``table[i][j]`` is the vector e_{i+1} . e_{j+1} (indices
are 0-based internally, 1-based at every user-facing surface).  Products
need not be commutative; the non-commutative products induced by
symplectic and cosymplectic structures live in the same type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .exact_core import (
    Mat,
    Vec,
    ZERO,
    in_span,
    invert,
    is_invertible,
    is_zero_vec,
    kernel_basis,
    mat_from_cols,
    mat_vec,
    rat,
    row_space_basis,
    unit_vec,
    vec_add,
    vec_scale,
    zero_vec,
)


@dataclass(frozen=True)
class Algebra:
    dim: int
    table: tuple[tuple[Vec, ...], ...]
    commutative: bool

    def __post_init__(self):
        if len(self.table) != self.dim or any(
            len(row) != self.dim or any(len(p) != self.dim for p in row) for row in self.table
        ):
            raise ValueError("structure-constant table does not match the dimension")
        if self.commutative and not _table_is_symmetric(self.table):
            raise ValueError("algebra flagged commutative but the table is not symmetric")

    def basis_product(self, i: int, j: int) -> Vec:
        """Product e_i . e_j, 1-based."""
        return self.table[i - 1][j - 1]

    def basis_vector(self, i: int) -> Vec:
        return unit_vec(self.dim, i)

    def is_trivial(self) -> bool:
        return all(is_zero_vec(p) for row in self.table for p in row)


def _table_is_symmetric(table) -> bool:
    n = len(table)
    return all(table[i][j] == table[j][i] for i in range(n) for j in range(i + 1, n))


def algebra_from_products(
    dim: int, products: Mapping[tuple[int, int], Mapping[int, object]], commutative: bool = True
) -> Algebra:
    """Build an algebra from sparse 1-based products e_i.e_j = sum_k c_k e_k.

    With ``commutative=True`` each (i, j) entry is mirrored to (j, i);
    supplying both orders with conflicting values is rejected.
    """
    table = [[zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
    seen = set()
    for (i, j), coeffs in products.items():
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise ValueError(f"product index ({i},{j}) out of range 1..{dim}")
        entry = list(zero_vec(dim))
        for k, c in coeffs.items():
            if not 1 <= k <= dim:
                raise ValueError(f"product target index {k} out of range 1..{dim}")
            entry[k - 1] = rat(c)
        v = tuple(entry)
        if (i, j) in seen:
            raise ValueError(f"duplicate product entry ({i},{j})")
        seen.add((i, j))
        table[i - 1][j - 1] = v
        if commutative:
            if (j, i) in seen and table[j - 1][i - 1] != v:
                raise ValueError(f"conflicting entries for commutative pair ({i},{j})")
            table[j - 1][i - 1] = v
    return Algebra(dim, tuple(tuple(row) for row in table), commutative)


def trivial_algebra(dim: int) -> Algebra:
    return Algebra(dim, tuple(tuple(zero_vec(dim) for _ in range(dim)) for _ in range(dim)), True)


def multiply(a: Algebra, x: Vec, y: Vec) -> Vec:
    """Bilinear extension of the structure constants."""
    if len(x) != a.dim or len(y) != a.dim:
        raise ValueError("vector length does not match the algebra dimension")
    out = zero_vec(a.dim)
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        row = a.table[i]
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            out = vec_add(out, vec_scale(xi * yj, row[j]))
    return out


def jacobiator(a: Algebra, x: Vec, y: Vec, z: Vec) -> Vec:
    """Cyclic sum x(yz) + y(zx) + z(xy)."""
    return vec_add(
        vec_add(multiply(a, x, multiply(a, y, z)), multiply(a, y, multiply(a, z, x))),
        multiply(a, z, multiply(a, x, y)),
    )


def is_commutative(a: Algebra) -> bool:
    return _table_is_symmetric(a.table)


def is_jacobi_jordan(a: Algebra) -> bool:
    """Commutative with vanishing jacobiator; basis tuples suffice by trilinearity."""
    if not is_commutative(a):
        return False
    basis = [a.basis_vector(i) for i in range(1, a.dim + 1)]
    for i in range(a.dim):
        for j in range(i, a.dim):
            for k in range(j, a.dim):
                if not is_zero_vec(jacobiator(a, basis[i], basis[j], basis[k])):
                    return False
    return True


def anti_associator(a: Algebra, x: Vec, y: Vec, z: Vec) -> Vec:
    """x(yz) + (xy)z under the algebra's (possibly non-commutative) product."""
    return vec_add(multiply(a, x, multiply(a, y, z)), multiply(a, multiply(a, x, y), z))


def is_anti_associative(a: Algebra) -> bool:
    basis = [a.basis_vector(i) for i in range(1, a.dim + 1)]
    return all(
        is_zero_vec(anti_associator(a, x, y, z)) for x in basis for y in basis for z in basis
    )


def is_right_skew(a: Algebra) -> bool:
    """(x,y,z) + (x,z,y) = 0 for the anti-associator, on all basis triples."""
    basis = [a.basis_vector(i) for i in range(1, a.dim + 1)]
    for x in basis:
        for y in basis:
            for z in basis:
                if not is_zero_vec(
                    vec_add(anti_associator(a, x, y, z), anti_associator(a, x, z, y))
                ):
                    return False
    return True


def is_left_skew(a: Algebra) -> bool:
    """(x,y,z) + (y,x,z) = 0 for the anti-associator, on all basis triples."""
    basis = [a.basis_vector(i) for i in range(1, a.dim + 1)]
    for x in basis:
        for y in basis:
            for z in basis:
                if not is_zero_vec(
                    vec_add(anti_associator(a, x, y, z), anti_associator(a, y, x, z))
                ):
                    return False
    return True


class AdmissibilityMismatch(RuntimeError):
    """The two admissibility criteria disagreed; indicates an implementation bug."""


def _cyclic_anti_associator_sum(a: Algebra, x: Vec, y: Vec, z: Vec) -> Vec:
    return vec_add(
        vec_add(anti_associator(a, x, y, z), anti_associator(a, y, z, x)),
        anti_associator(a, z, x, y),
    )


def is_admissible_jj(a: Algebra) -> bool:
    """True when the symmetrized product is Jacobi-Jordan.

    Decided by the cyclic criterion
    (cyclic sum of (x,y,z)) = -(cyclic sum of (x,z,y)),
    cross-checked against symmetrize + is_jacobi_jordan; the two criteria
    are equivalent, so disagreement raises AdmissibilityMismatch.
    """
    basis = [a.basis_vector(i) for i in range(1, a.dim + 1)]
    cyclic = True
    for x in basis:
        for y in basis:
            for z in basis:
                lhs = _cyclic_anti_associator_sum(a, x, y, z)
                rhs = _cyclic_anti_associator_sum(a, x, z, y)
                if not is_zero_vec(vec_add(lhs, rhs)):
                    cyclic = False
                    break
            if not cyclic:
                break
        if not cyclic:
            break
    direct = is_jacobi_jordan(symmetrize(a))
    if cyclic != direct:
        raise AdmissibilityMismatch(
            f"cyclic criterion gives {cyclic}, symmetrized-product criterion gives {direct}"
        )
    return cyclic


def symmetrize(a: Algebra) -> Algebra:
    """Commutative algebra with product x.y = xy + yx."""
    table = tuple(
        tuple(vec_add(a.table[i][j], a.table[j][i]) for j in range(a.dim)) for i in range(a.dim)
    )
    return Algebra(a.dim, table, True)


def opposite(a: Algebra) -> Algebra:
    table = tuple(tuple(a.table[j][i] for j in range(a.dim)) for i in range(a.dim))
    return Algebra(a.dim, table, a.commutative)


def jordan_identity_holds(a: Algebra) -> bool:
    """Check x^2(yx) = (x^2 y)x on a polarization-complete test set.

    The identity is linear in y but cubic in x, so basis vectors alone do
    not suffice: x ranges over basis vectors plus all two- and three-term
    basis sums (enough to recover the full trilinear polarization in
    characteristic zero).
    """
    if not is_commutative(a):
        raise ValueError("the Jordan identity test requires a commutative algebra")
    basis = [a.basis_vector(i) for i in range(1, a.dim + 1)]
    xs = list(basis)
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            xs.append(vec_add(basis[i], basis[j]))
            for k in range(j + 1, a.dim):
                xs.append(vec_add(vec_add(basis[i], basis[j]), basis[k]))
    for x in xs:
        x2 = multiply(a, x, x)
        for y in basis:
            lhs = multiply(a, x2, multiply(a, y, x))
            rhs = multiply(a, multiply(a, x2, y), x)
            if lhs != rhs:
                return False
    return True


def left_mult_matrix(a: Algebra, x: Vec) -> Mat:
    """Matrix of y -> x.y, columns are images of basis vectors."""
    cols = [multiply(a, x, a.basis_vector(j)) for j in range(1, a.dim + 1)]
    return mat_from_cols(cols)


def right_mult_matrix(a: Algebra, x: Vec) -> Mat:
    cols = [multiply(a, a.basis_vector(j), x) for j in range(1, a.dim + 1)]
    return mat_from_cols(cols)


def center(a: Algebra) -> list[Vec]:
    """Basis of {z : z.x = x.z = 0 for all x}, via one stacked kernel computation."""
    rows: list[Vec] = []
    for i in range(1, a.dim + 1):
        rows.extend(right_mult_matrix(a, a.basis_vector(i)))
        if not a.commutative:
            rows.extend(left_mult_matrix(a, a.basis_vector(i)))
    # right_mult_matrix(e_i) has columns e_j.e_i, so its kernel is {z : z.e_i = 0}
    return kernel_basis(tuple(rows))


def derived_subalgebra(a: Algebra) -> list[Vec]:
    """Reduced basis of the span of all products."""
    products = [a.table[i][j] for i in range(a.dim) for j in range(a.dim)]
    return row_space_basis(products)


def power_chain_dims(a: Algebra) -> tuple[int, ...]:
    """Dimensions of the descending chain A^2, A.A^2, A.(A.A^2), ... until stable."""
    dims: list[int] = []
    current = derived_subalgebra(a)
    while True:
        dims.append(len(current))
        if not current:
            break
        nxt_vectors = [
            multiply(a, a.basis_vector(i), v) for i in range(1, a.dim + 1) for v in current
        ]
        nxt = row_space_basis(nxt_vectors)
        if len(nxt) == len(current):
            break
        current = nxt
    return tuple(dims)


@dataclass(frozen=True)
class InvariantFingerprint:
    """Isomorphism-invariant summary used to separate non-isomorphic algebras."""

    dim: int
    derived_dim: int
    center_dim: int
    power_dims: tuple[int, ...]


def fingerprint(a: Algebra) -> InvariantFingerprint:
    return InvariantFingerprint(
        dim=a.dim,
        derived_dim=len(derived_subalgebra(a)),
        center_dim=len(center(a)),
        power_dims=power_chain_dims(a),
    )


@dataclass(frozen=True)
class AlgebraMorphism:
    source: Algebra
    target: Algebra
    matrix: Mat  # target.dim rows x source.dim columns; columns are images

    def __post_init__(self):
        if len(self.matrix) != self.target.dim or any(
            len(row) != self.source.dim for row in self.matrix
        ):
            raise ValueError("morphism matrix shape does not match source/target dimensions")

    def apply(self, x: Vec) -> Vec:
        return mat_vec(self.matrix, x)

    def is_invertible(self) -> bool:
        return self.source.dim == self.target.dim and is_invertible(self.matrix)


def is_algebra_morphism(phi: AlgebraMorphism) -> bool:
    return morphism_failure(phi) is None


def morphism_failure(phi: AlgebraMorphism) -> tuple[int, int] | None:
    """First 1-based basis pair (i, j) with phi(e_i.e_j) != phi(e_i).phi(e_j)."""
    src, tgt = phi.source, phi.target
    for i in range(1, src.dim + 1):
        for j in range(1, src.dim + 1):
            lhs = phi.apply(src.basis_product(i, j))
            rhs = multiply(tgt, phi.apply(src.basis_vector(i)), phi.apply(src.basis_vector(j)))
            if lhs != rhs:
                return (i, j)
    return None


def transport_algebra(a: Algebra, t: Mat) -> Algebra:
    """Algebra with basis moved by the invertible map t, so that t: a -> result
    is an isomorphism: new product x*y = t(t^-1(x) . t^-1(y))."""
    t_inv = invert(t)
    cols = []
    for j in range(a.dim):
        col_j = tuple(t_inv[r][j] for r in range(a.dim))
        cols.append(col_j)
    table = []
    for i in range(a.dim):
        row = []
        for j in range(a.dim):
            row.append(mat_vec(t, multiply(a, cols[i], cols[j])))
        table.append(tuple(row))
    return Algebra(a.dim, tuple(table), a.commutative)
