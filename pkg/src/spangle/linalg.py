"""Dense matrix kernel shared by every other module.

Real scalars are float64, complex scalars are complex128; a :class:`Field`
tag travels with every higher-level object so both cases run through one
code path.  Matrices are plain numpy arrays in C (row-major) order with
vectors stored as columns.  All routines are pure functions on immutable
values and are sized for small dense problems (ambient dimension <= 64).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class Field(enum.Enum):
    """Ground field of a subspace: real or complex scalars."""

    REAL = "real"
    COMPLEX = "complex"

    @property
    def dtype(self) -> np.dtype:
        return np.dtype(np.complex128 if self is Field.COMPLEX else np.float64)


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical policy used by every operation.

    rank_rel_tol   relative singular-value cutoff for numerical rank
    compare_tol    tolerance for equality/orthogonality comparisons
    clamp_cos      clamp cosines into [0, 1] before arccos (rounding can
                   push them slightly outside)
    """

    rank_rel_tol: float = 1e-12
    compare_tol: float = 1e-9
    clamp_cos: bool = True

    def __post_init__(self) -> None:
        if not (0.0 < self.rank_rel_tol < self.compare_tol < 1.0):
            raise ValueError(
                "tolerances must satisfy 0 < rank_rel_tol < compare_tol < 1, "
                f"got rank_rel_tol={self.rank_rel_tol}, compare_tol={self.compare_tol}"
            )


DEFAULT_TOLERANCES = ToleranceConfig()


def as_field_array(values: Iterable, field: Field) -> np.ndarray:
    """Convert to the dtype of ``field``, rejecting complex data under REAL."""
    arr = np.asarray(values)
    if field is Field.REAL and np.iscomplexobj(arr):
        if np.any(arr.imag != 0):
            raise ValueError("complex entries are not allowed in a REAL-tagged value")
        arr = arr.real
    return np.ascontiguousarray(arr.astype(field.dtype))


def infer_field(arr: np.ndarray) -> Field:
    return Field.COMPLEX if np.iscomplexobj(arr) else Field.REAL


def clamp01(x: float) -> float:
    return min(max(x, 0.0), 1.0)


def arccos_clamped(x: float, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> float:
    """arccos with the configured clamping policy applied first."""
    if cfg.clamp_cos:
        x = clamp01(x)
    return math.acos(x)


def stack_columns(vectors: Sequence, field: Field, ambient_dim: int | None = None) -> np.ndarray:
    """Stack vectors as matrix columns, checking dimensions and field.

    Empty input is allowed when ``ambient_dim`` is given and yields an
    ``(ambient_dim, 0)`` matrix.
    """
    vecs = [as_field_array(v, field) for v in vectors]
    for v in vecs:
        if v.ndim != 1:
            raise ValueError("each spanning vector must be one-dimensional")
    if not vecs:
        if ambient_dim is None:
            raise ValueError("ambient_dim is required for an empty vector list")
        return np.zeros((ambient_dim, 0), dtype=field.dtype)
    n = vecs[0].shape[0]
    for v in vecs:
        if v.shape[0] != n:
            raise ValueError(f"dimension mismatch: expected vectors of length {n}, got {v.shape[0]}")
    if ambient_dim is not None and n != ambient_dim:
        raise ValueError(f"dimension mismatch: vectors have length {n}, ambient_dim is {ambient_dim}")
    return np.column_stack(vecs)


def numerical_rank(sigma: np.ndarray, shape: tuple[int, int], cfg: ToleranceConfig) -> int:
    """Rank = number of singular values above the relative threshold.

    The threshold scales with the largest singular value and the matrix
    size, so rank detection is invariant under rescaling of the input.
    """
    if sigma.size == 0:
        return 0
    cutoff = cfg.rank_rel_tol * float(sigma[0]) * max(shape)
    return int(np.count_nonzero(sigma > cutoff))


def orthonormalize(
    vectors: Sequence,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    field: Field | None = None,
    ambient_dim: int | None = None,
) -> tuple[np.ndarray, int]:
    """Orthonormal basis for the span of ``vectors`` via SVD.

    Returns ``(Q, rank)`` where ``Q`` is (n, rank) with orthonormal columns
    spanning the same subspace as the input.  ``field=None`` infers the
    field from the data; passing ``Field.REAL`` with complex data raises.
    """
    if field is None:
        probe = [np.asarray(v) for v in vectors]
        field = Field.COMPLEX if any(np.iscomplexobj(v) for v in probe) else Field.REAL
        vectors = probe
    M = stack_columns(vectors, field, ambient_dim=ambient_dim)
    return orthonormalize_columns(M, cfg)


def orthonormalize_columns(M: np.ndarray, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> tuple[np.ndarray, int]:
    """SVD-based column orthonormalization of a matrix, with rank cut."""
    if M.shape[1] == 0:
        return M.copy(), 0
    U, sigma, _ = np.linalg.svd(M, full_matrices=False)
    rank = numerical_rank(sigma, M.shape, cfg)
    return np.ascontiguousarray(U[:, :rank]), rank


def svd(M: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Thin SVD returning ``(U, sigma, V)`` with ``M = U @ diag(sigma) @ V*``.

    ``sigma`` is descending and nonnegative; ``U`` and ``V`` have
    orthonormal columns.  Empty matrices yield empty factors.
    """
    U, sigma, Vh = np.linalg.svd(M, full_matrices=False)
    return U, sigma, Vh.conj().T


def det(M: np.ndarray):
    """Determinant by pivoted LU (LAPACK).  Size 0 gives exactly 1."""
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"determinant requires a square matrix, got shape {M.shape}")
    if M.shape[0] == 0:
        return complex(1.0) if np.iscomplexobj(M) else 1.0
    if M.shape[0] == 1:
        return M[0, 0].item()
    return np.linalg.det(M).item()


def solve(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Linear solve A X = B (never forms an explicit inverse)."""
    if A.shape[0] == 0:
        return np.zeros((0,) + B.shape[1:], dtype=B.dtype)
    return np.linalg.solve(A, B)


def conj_transpose(M: np.ndarray) -> np.ndarray:
    return M.conj().T


def clamped_product(values: np.ndarray) -> float:
    """Product of factors clamped into [0, 1], in log-space beyond 20
    factors (many small factors underflow a direct product)."""
    v = np.clip(np.asarray(values, dtype=np.float64), 0.0, 1.0)
    if v.size == 0:
        return 1.0
    if np.any(v == 0.0):
        return 0.0
    if v.size <= 20:
        return float(np.prod(v))
    return float(math.exp(np.sum(np.log(v))))


def product_of_cosines(angles: np.ndarray) -> float:
    """prod(cos(theta_i)) with clamping and the log-space guard."""
    return clamped_product(np.cos(np.asarray(angles, dtype=np.float64)))


def product_of_sines(angles: np.ndarray) -> float:
    """prod(sin(theta_i)) with clamping and the log-space guard."""
    return clamped_product(np.sin(np.asarray(angles, dtype=np.float64)))


def principal_phase(z: complex) -> float:
    """Argument of ``z`` in (-pi, pi]; exactly -pi is mapped to +pi."""
    ph = math.atan2(z.imag, z.real) if isinstance(z, complex) else (0.0 if z >= 0 else math.pi)
    if ph == -math.pi:
        ph = math.pi
    return ph
