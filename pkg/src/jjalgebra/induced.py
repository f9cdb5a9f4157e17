"""Non-commutative products induced by symplectic and cosymplectic structures.

Both products are assembled column-by-column from exact linear solves;
non-degeneracy of the defining form makes every solution unique, so no
tie-breaking is involved.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, multiply
from .exact_core import (
    Mat,
    Vec,
    ZERO,
    bilinear,
    kernel_basis,
    mat_from_cols,
    mat_vec,
    solve_linear,
    transpose,
)
from .forms import (
    BilinearForm,
    CosymplecticStructure,
    is_symplectic,
    psi_matrix,
    restrict_form,
)


@dataclass(frozen=True)
class InducedProduct:
    """A non-commutative product together with the structure that defined it."""

    base: Algebra
    induced: Algebra
    witness: str


def odot_product(a: Algebra, omega: BilinearForm) -> Algebra:
    """Right-skew-symmetric product defined by omega(x odot y, z) = omega(x, y.z).

    Requires (a, omega) symplectic; each basis product is the unique solution
    of an exact linear system against the omega matrix.
    """
    if not is_symplectic(a, omega):
        raise ValueError("odot product needs a symplectic structure")
    n = a.dim
    omega_t = transpose(omega.matrix)
    table = []
    for i in range(n):
        row = []
        ei = a.basis_vector(i + 1)
        for j in range(n):
            rhs = tuple(bilinear(omega.matrix, ei, a.table[j][k]) for k in range(n))
            x = solve_linear(omega_t, rhs)
            assert x is not None  # omega is non-degenerate
            row.append(x)
        table.append(tuple(row))
    return Algebra(n, tuple(table), commutative=False)


def star_product(s: CosymplecticStructure) -> Algebra:
    """Product defined through Psi by Psi(x*y)(z) = Psi(x)(y.z)."""
    a = s.algebra
    n = a.dim
    m = psi_matrix(s.alpha, s.omega)
    m_t = transpose(m)
    table = []
    for i in range(n):
        row = []
        ei = a.basis_vector(i + 1)
        for j in range(n):
            rhs = tuple(bilinear(m, ei, a.table[j][k]) for k in range(n))
            x = solve_linear(m_t, rhs)
            assert x is not None  # Psi is invertible for a valid structure
            row.append(x)
        table.append(tuple(row))
    return Algebra(n, tuple(table), commutative=False)


def kernel_of_form(alpha: Vec) -> list[Vec]:
    """Deterministic basis of ker(alpha), via the pinned kernel_basis rule."""
    return kernel_basis((alpha,))


@dataclass(frozen=True)
class RestrictedStructure:
    """ker(alpha) with the restricted product and form, in h-coordinates."""

    h_basis: list[Vec]  # ambient coordinates of the chosen basis of ker(alpha)
    algebra: Algebra  # product of the ambient algebra restricted to ker(alpha)
    omega_h: BilinearForm

    def embed(self, v: Vec) -> Vec:
        """h-coordinates -> ambient coordinates."""
        out = None
        for c, b in zip(v, self.h_basis):
            scaled = tuple(c * x for x in b)
            out = scaled if out is None else tuple(p + q for p, q in zip(out, scaled))
        return out

    def coords(self, v: Vec) -> Vec:
        """Ambient vector lying in ker(alpha) -> h-coordinates."""
        sol = solve_linear(mat_from_cols(tuple(self.h_basis)), v)
        if sol is None or self.embed(sol) != v:
            raise ValueError("vector does not lie in the kernel subspace")
        return sol


def restrict_structure(s: CosymplecticStructure) -> RestrictedStructure:
    """The ideal h = ker(alpha) with omega restricted; symplectic by construction."""
    h_basis = kernel_of_form(s.alpha)
    k = len(h_basis)
    cols_matrix = mat_from_cols(tuple(h_basis))
    table = []
    for i in range(k):
        row = []
        for j in range(k):
            prod = multiply(s.algebra, h_basis[i], h_basis[j])
            coords = solve_linear(cols_matrix, prod)
            if coords is None:
                raise ValueError("product left the kernel subspace; alpha is not closed")
            row.append(coords)
        table.append(tuple(row))
    h_alg = Algebra(k, tuple(table), commutative=s.algebra.commutative)
    omega_h = restrict_form(s.omega, h_basis)
    return RestrictedStructure(h_basis, h_alg, omega_h)


def odot_on_kernel(s: CosymplecticStructure) -> tuple[RestrictedStructure, Algebra]:
    """The odot product of (ker alpha, omega restricted), in h-coordinates."""
    restricted = restrict_structure(s)
    return restricted, odot_product(restricted.algebra, restricted.omega_h)
