"""Angles from arbitrary (non-orthonormal) bases via Gram determinants.

With A the Gram matrix of W's basis, D the Gram matrix of V's basis and
B the cross-Gram <w_i, v_j>, the squared cosine of the directed angle is
det(B* A^-1 B) / det D, and the squared cosine of the complementary
angle is det(A - B D^-1 B*) / det A.  A^-1 B and D^-1 B* are computed by
linear solves; badly conditioned Gram matrices are rejected instead of
silently producing garbage.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .linalg import (
    DEFAULT_TOLERANCES,
    Field,
    ToleranceConfig,
    arccos_clamped,
    clamp01,
    det,
    solve,
    stack_columns,
)

GRAM_CONDITION_LIMIT = 1e12

_ZERO_ANGLE_COS_SQ_BAND = (1.0 - 256.0 * np.finfo(np.float64).eps) ** 2


def _angle_from_cos_sq(cos_sq: float, cfg: ToleranceConfig) -> float:
    """arccos of the square root, with an exact 0 inside the roundoff
    band at 1 (matching the principal-angle fast path)."""
    if cos_sq >= _ZERO_ANGLE_COS_SQ_BAND:
        return 0.0
    return arccos_clamped(math.sqrt(cos_sq), cfg)


class ProjectionAngleMode(enum.Enum):
    THETA = "theta"
    PERP = "perp"


def _gram_matrices(basis_v, basis_w, field: Field, cfg: ToleranceConfig, ambient_dim: int | None):
    # Empty lists denote the zero subspace; the ambient size then comes
    # from the other list or from an explicit ambient_dim.
    if ambient_dim is None:
        if len(basis_v):
            ambient_dim = np.asarray(basis_v[0]).shape[0]
        elif len(basis_w):
            ambient_dim = np.asarray(basis_w[0]).shape[0]
        else:
            raise ValueError("cannot infer the ambient dimension from two empty lists")
    Vm = stack_columns(basis_v, field, ambient_dim=ambient_dim)
    Wm = stack_columns(basis_w, field, ambient_dim=ambient_dim)
    A = Wm.conj().T @ Wm
    B = Wm.conj().T @ Vm
    D = Vm.conj().T @ Vm
    _check_conditioning(A, "second")
    _check_conditioning(D, "first")
    return A, B, D


def _check_conditioning(G: np.ndarray, which: str) -> None:
    if G.shape[0] == 0:
        return
    sigma = np.linalg.svd(G, compute_uv=False)
    if sigma[-1] == 0.0 or sigma[0] / sigma[-1] > GRAM_CONDITION_LIMIT:
        raise ValueError(
            f"the {which} basis list is numerically dependent "
            f"(Gram condition above {GRAM_CONDITION_LIMIT:.0e})"
        )


def _psd_det_rank_floored(M: np.ndarray, reference: np.ndarray, cfg: ToleranceConfig) -> float:
    """Determinant of a Hermitian PSD matrix with noise eigenvalues
    zeroed.

    The matrices landing here (projected Gram products, Schur
    complements) are often *structurally* singular: eigenvalues that are
    mathematically zero come back as determinant residue of order eps
    that a naive det would turn into sqrt(eps)-sized cosines.  Both are
    dominated (in the PSD order) by ``reference``, so eigenvalues below
    the rank threshold relative to the reference's scale are exact zeros.
    """
    if M.shape[0] == 0:
        return 1.0
    H = (M + M.conj().T) / 2.0
    eigs = np.linalg.eigvalsh(H)
    ref_top = float(np.linalg.eigvalsh((reference + reference.conj().T) / 2.0)[-1])
    if ref_top <= 0.0:
        return 0.0
    floor = cfg.rank_rel_tol * ref_top * M.shape[0]
    eigs = np.where(eigs > floor, eigs, 0.0)
    return float(np.prod(eigs))


def angle_from_gram(
    basis_v,
    basis_w,
    field: Field,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    ambient_dim: int | None = None,
) -> float:
    """Directed angle of span(basis_v) with span(basis_w) from raw bases.

    When p > q the product matrix is rank deficient and its floored
    determinant vanishes, giving pi/2 as it must.
    """
    A, B, D = _gram_matrices(basis_v, basis_w, field, cfg, ambient_dim)
    numerator = _psd_det_rank_floored(B.conj().T @ solve(A, B), D, cfg)
    cos_sq = clamp01(numerator / float(np.real(det(D))))
    return _angle_from_cos_sq(cos_sq, cfg)


def angle_from_gram_equal_dim(
    basis_v,
    basis_w,
    field: Field,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    ambient_dim: int | None = None,
) -> float:
    """Equal-dimension shortcut: cos^2 = |det B|^2 / (det A det D)."""
    A, B, D = _gram_matrices(basis_v, basis_w, field, cfg, ambient_dim)
    if B.shape[0] != B.shape[1]:
        raise ValueError(
            f"the equal-dimension shortcut needs equally many vectors, got {B.shape[1]} and {B.shape[0]}"
        )
    cos_sq = clamp01(
        abs(det(B)) ** 2 / (float(np.real(det(A))) * float(np.real(det(D))))
        if B.shape[0]
        else 1.0
    )
    return _angle_from_cos_sq(cos_sq, cfg)


def complementary_from_gram(
    basis_v,
    basis_w,
    field: Field,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    ambient_dim: int | None = None,
) -> float:
    """Complementary angle from raw bases via the Schur complement."""
    A, B, D = _gram_matrices(basis_v, basis_w, field, cfg, ambient_dim)
    schur = A - B @ solve(D, B.conj().T)
    cos_sq = clamp01(_psd_det_rank_floored(schur, A, cfg) / float(np.real(det(A))))
    return _angle_from_cos_sq(cos_sq, cfg)


def angle_from_projection_matrix(
    P: np.ndarray,
    mode: ProjectionAngleMode,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
) -> float:
    """Angles from a (q, p) matrix representing the orthogonal projection
    V -> W in orthonormal bases.

    THETA: arccos sqrt(det(P* P));  PERP: arccos sqrt(det(I_q - P P*)).
    """
    P = np.asarray(P)
    if P.ndim != 2:
        raise ValueError(f"projection matrix must be 2-dimensional, got shape {P.shape}")
    if mode is ProjectionAngleMode.THETA:
        value = det(P.conj().T @ P)
    elif mode is ProjectionAngleMode.PERP:
        q = P.shape[0]
        value = det(np.eye(q, dtype=P.dtype) - P @ P.conj().T)
    else:
        raise ValueError(f"unknown mode: {mode!r}")
    cos_sq = clamp01(float(np.real(value)))
    return arccos_clamped(math.sqrt(cos_sq), cfg)
