"""Principal angles and bases, partial orthogonality, principal partitions.

Principal angles come from the SVD of the cross-Gram of orthonormal
bases: its singular values are the cosines (clamped into [0, 1] before
arccos) and the rotated bases satisfy <e_i, f_j> = delta_ij cos(theta_i).
Principal vectors are not unique; only angles and spans are comparable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .linalg import DEFAULT_TOLERANCES, ToleranceConfig
from .subspace import Subspace, _check_pair, project_subspace, spans_equal, sum_subspace


@dataclass(frozen=True)
class PrincipalDecomposition:
    """Sorted principal angles plus associated principal bases.

    angles       ascending, length min(p, q)
    left_basis   (n, p) orthonormal basis of the first subspace
    right_basis  (n, q) orthonormal basis of the second subspace

    Columns past index min(p, q) complete the bases arbitrarily.
    """

    angles: np.ndarray
    left_basis: np.ndarray
    right_basis: np.ndarray

    @property
    def cosines(self) -> np.ndarray:
        return np.cos(self.angles)


@dataclass(frozen=True)
class Partition:
    """A list of pairwise-disjoint subspaces whose direct sum is a subspace."""

    parts: tuple[Subspace, ...]

    def __init__(self, parts: Sequence[Subspace]):
        object.__setattr__(self, "parts", tuple(parts))


def principal_decomposition(
    V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES
) -> PrincipalDecomposition:
    """Principal angles and bases of a pair of nonzero subspaces."""
    _check_pair(V, W)
    if V.is_zero or W.is_zero:
        raise ValueError("principal bases are undefined for the zero subspace")
    M = W.basis.conj().T @ V.basis  # (q, p) cross-Gram
    U, sigma, Vh = np.linalg.svd(M, full_matrices=True)
    cos = np.clip(sigma, 0.0, 1.0)
    angles = np.arccos(cos)  # descending sigma -> ascending angles
    left = V.basis @ Vh.conj().T
    right = W.basis @ U
    return PrincipalDecomposition(angles=angles, left_basis=left, right_basis=right)


def principal_cosines(
    V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES
) -> np.ndarray:
    """Descending principal cosines: the singular values of the
    cross-Gram, clamped into [0, 1].  Working with the cosines avoids the
    arccos precision loss near zero angles."""
    _check_pair(V, W)
    if V.is_zero or W.is_zero:
        return np.zeros(0)
    M = W.basis.conj().T @ V.basis
    sigma = np.linalg.svd(M, compute_uv=False)
    return np.clip(sigma, 0.0, 1.0)


def principal_angles(
    V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES
) -> np.ndarray:
    """Just the ascending principal angles (empty when either space is {0})."""
    return np.arccos(principal_cosines(V, W, cfg))


def is_partially_orthogonal(
    V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES
) -> bool:
    """True when V contains a nonzero vector orthogonal to all of W.

    Equivalent to dim V > dim W or some principal angle being pi/2.
    {0} is never partially orthogonal to anything.
    """
    _check_pair(V, W)
    if V.is_zero:
        return False
    if V.dim > W.dim:
        return True
    angles = principal_angles(V, W, cfg)
    return bool(angles.size and angles[-1] >= math.pi / 2 - cfg.compare_tol)


def _parts_sum_to(parts: Sequence[Subspace], V: Subspace, cfg: ToleranceConfig) -> bool:
    total = sum(p.dim for p in parts)
    if total != V.dim:
        return False
    if not parts:
        return V.is_zero
    joined = parts[0]
    for p in parts[1:]:
        joined = sum_subspace(joined, p, cfg)
    return joined.dim == V.dim and spans_equal(joined, V, cfg)


def _pairwise_orthogonal(parts: Sequence[Subspace], cfg: ToleranceConfig) -> bool:
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if parts[i].dim == 0 or parts[j].dim == 0:
                continue
            cross = parts[i].basis.conj().T @ parts[j].basis
            if float(np.max(np.abs(cross))) > cfg.compare_tol:
                return False
    return True


def is_principal_partition(
    V: Subspace,
    partition: Partition,
    W: Subspace,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
) -> bool:
    """Whether a partition of V is principal with respect to W.

    A partition assembled from coordinate subspaces of one principal basis
    is characterized by its projections onto W being pairwise orthogonal.
    Non-orthogonal partitions are never principal.
    """
    _check_pair(V, W)
    if W.is_zero:
        raise ValueError("principal partitions are undefined against the zero subspace")
    parts = partition.parts
    if not _parts_sum_to(parts, V, cfg):
        raise ValueError("partition parts do not sum to the given subspace")
    if not _pairwise_orthogonal(parts, cfg):
        return False
    projected = [project_subspace(W, p, cfg) for p in parts]
    return _pairwise_orthogonal(projected, cfg)
