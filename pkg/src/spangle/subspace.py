"""Subspaces of a real or complex inner-product space.

A :class:`Subspace` is an ambient dimension, a field tag and an (n, p)
matrix with orthonormal columns; p = 0 is the zero subspace {0}, a
first-class value accepted by every operation.  Set-level operations
(projection, complement, intersection, sum, realification) live here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_TOLERANCES,
    Field,
    ToleranceConfig,
    as_field_array,
    orthonormalize_columns,
    stack_columns,
)

_ORTHO_CHECK_TOL = 1e-8


@dataclass(frozen=True)
class Subspace:
    """A subspace given by an orthonormal basis matrix (columns)."""

    ambient_dim: int
    field: Field
    basis: np.ndarray

    def __post_init__(self) -> None:
        basis = np.ascontiguousarray(as_field_array(self.basis, self.field))
        if basis.ndim != 2 or basis.shape[0] != self.ambient_dim:
            raise ValueError(
                f"basis must be ({self.ambient_dim}, p), got shape {basis.shape}"
            )
        if basis.shape[1] > self.ambient_dim:
            raise ValueError("subspace dimension cannot exceed the ambient dimension")
        gram = basis.conj().T @ basis
        if basis.shape[1] and np.max(np.abs(gram - np.eye(basis.shape[1]))) > _ORTHO_CHECK_TOL:
            raise ValueError("basis columns are not orthonormal")
        basis.setflags(write=False)
        object.__setattr__(self, "basis", basis)

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def projector(self) -> np.ndarray:
        """The (n, n) orthogonal projection matrix onto this subspace."""
        return self.basis @ self.basis.conj().T


def zero_subspace(ambient_dim: int, field: Field) -> Subspace:
    return Subspace(ambient_dim, field, np.zeros((ambient_dim, 0), dtype=field.dtype))


def full_space(ambient_dim: int, field: Field) -> Subspace:
    return Subspace(ambient_dim, field, np.eye(ambient_dim, dtype=field.dtype))


def from_spanning(
    vectors,
    field: Field,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    ambient_dim: int | None = None,
) -> Subspace:
    """Subspace spanned by the given vectors (not necessarily independent).

    An empty list needs an explicit ``ambient_dim`` and yields {0}.
    """
    M = stack_columns(vectors, field, ambient_dim=ambient_dim)
    Q, _ = orthonormalize_columns(M, cfg)
    return Subspace(M.shape[0], field, Q)


def from_basis_matrix(M: np.ndarray, field: Field, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> Subspace:
    """Subspace spanned by the columns of a matrix."""
    M = as_field_array(M, field)
    Q, _ = orthonormalize_columns(M, cfg)
    return Subspace(M.shape[0], field, Q)


def _check_pair(V: Subspace, W: Subspace) -> None:
    if V.ambient_dim != W.ambient_dim:
        raise ValueError(
            f"ambient dimension mismatch: {V.ambient_dim} vs {W.ambient_dim}"
        )
    if V.field is not W.field:
        raise ValueError(f"field mismatch: {V.field.value} vs {W.field.value}")


def project_vector(W: Subspace, v) -> np.ndarray:
    """Orthogonal projection of a vector onto W."""
    v = as_field_array(v, W.field)
    if v.shape != (W.ambient_dim,):
        raise ValueError(f"vector has shape {v.shape}, expected ({W.ambient_dim},)")
    return W.basis @ (W.basis.conj().T @ v)


def project_subspace(W: Subspace, V: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> Subspace:
    """The image of V under orthogonal projection onto W.

    The singular values of the projected basis are the principal cosines,
    so directions at (numerically) a right angle to W drop out and the
    image dimension can be smaller than dim V.
    """
    _check_pair(W, V)
    if V.is_zero or W.is_zero:
        return zero_subspace(V.ambient_dim, V.field)
    projected = W.basis @ (W.basis.conj().T @ V.basis)
    Q, _ = orthonormalize_columns(projected, cfg)
    return Subspace(V.ambient_dim, V.field, Q)


def complement(V: Subspace) -> Subspace:
    """Orthogonal complement, of dimension n - dim V."""
    n, p = V.ambient_dim, V.dim
    if p == 0:
        return full_space(n, V.field)
    if p == n:
        return zero_subspace(n, V.field)
    # Full SVD of the basis: the trailing left singular vectors span the
    # orthogonal complement exactly.
    U, _, _ = np.linalg.svd(V.basis, full_matrices=True)
    return Subspace(n, V.field, np.ascontiguousarray(U[:, p:]))


def sum_subspace(V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> Subspace:
    """V + W, the span of both."""
    _check_pair(V, W)
    stacked = np.hstack([V.basis, W.basis])
    Q, _ = orthonormalize_columns(stacked, cfg)
    return Subspace(V.ambient_dim, V.field, Q)


def intersect(V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> Subspace:
    """V intersect W, from the principal directions at a numerically zero angle.

    A principal direction is counted as common when its cosine is within
    ``compare_tol`` of 1; thresholding the angle itself is hopeless in
    double precision because arccos is ill-conditioned at 0.
    """
    _check_pair(V, W)
    if V.is_zero or W.is_zero:
        return zero_subspace(V.ambient_dim, V.field)
    M = W.basis.conj().T @ V.basis
    _, sigma, Vh = np.linalg.svd(M, full_matrices=False)
    keep = sigma >= 1.0 - cfg.compare_tol
    common = V.basis @ Vh.conj().T[:, keep]
    Q, _ = orthonormalize_columns(common, cfg)
    return Subspace(V.ambient_dim, V.field, Q)


def contains_vector(V: Subspace, v, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> bool:
    v = as_field_array(v, V.field)
    residual = v - project_vector(V, v)
    scale = max(float(np.linalg.norm(v)), 1.0)
    return float(np.linalg.norm(residual)) <= cfg.compare_tol * scale


def is_subspace_of(V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> bool:
    """True when every basis direction of V lies in W."""
    _check_pair(V, W)
    if V.is_zero:
        return True
    residual = V.basis - W.basis @ (W.basis.conj().T @ V.basis)
    return float(np.max(np.abs(residual))) <= cfg.compare_tol


def spans_equal(V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> bool:
    """Span equality, compared through the projection matrices."""
    _check_pair(V, W)
    if V.dim != W.dim:
        return False
    return float(np.max(np.abs(V.projector() - W.projector()))) <= cfg.compare_tol


def realify_vector(v: np.ndarray) -> np.ndarray:
    """Complex vector -> real vector of twice the length, interleaved.

    Layout is (re_1, im_1, re_2, im_2, ...), which keeps multiplication
    by i block-diagonal with 2x2 rotation blocks.
    """
    v = np.asarray(v, dtype=np.complex128)
    out = np.empty(2 * v.shape[0], dtype=np.float64)
    out[0::2] = v.real
    out[1::2] = v.imag
    return out


def realification_j(n: int) -> np.ndarray:
    """The matrix of multiplication by i on the realified space R^(2n)."""
    J = np.zeros((2 * n, 2 * n))
    for k in range(n):
        J[2 * k, 2 * k + 1] = -1.0
        J[2 * k + 1, 2 * k] = 1.0
    return J


def realify(V: Subspace) -> Subspace:
    """Underlying real subspace of a complex one: ambient 2n, dimension 2p.

    The real basis pairs each complex basis vector b with i*b; the real
    inner product is Re<.,.> so the images stay orthonormal.
    """
    if V.field is not Field.COMPLEX:
        raise ValueError("realify expects a COMPLEX subspace")
    cols = []
    for j in range(V.dim):
        b = V.basis[:, j]
        cols.append(realify_vector(b))
        cols.append(realify_vector(1j * b))
    basis = np.column_stack(cols) if cols else np.zeros((2 * V.ambient_dim, 0))
    return Subspace(2 * V.ambient_dim, Field.REAL, basis)
