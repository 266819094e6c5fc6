"""Seeded random generators for subspaces and transformations.

Subspaces are Haar-uniform: orthonormalized Gaussian matrices.  Every
function takes an explicit numpy Generator so harness runs are
reproducible and trials can be parallelized with independent streams.
"""

from __future__ import annotations

import numpy as np

from .linalg import DEFAULT_TOLERANCES, Field, ToleranceConfig
from .subspace import Subspace, from_basis_matrix, zero_subspace


def gaussian_matrix(rng: np.random.Generator, rows: int, cols: int, field: Field) -> np.ndarray:
    if field is Field.COMPLEX:
        return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))
    return rng.standard_normal((rows, cols))


def haar_subspace(
    rng: np.random.Generator,
    ambient_dim: int,
    dim: int,
    field: Field,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
) -> Subspace:
    """Uniformly random dim-dimensional subspace of an ambient space."""
    if not 0 <= dim <= ambient_dim:
        raise ValueError(f"need 0 <= dim <= ambient_dim, got dim={dim}, ambient_dim={ambient_dim}")
    if dim == 0:
        return zero_subspace(ambient_dim, field)
    return from_basis_matrix(gaussian_matrix(rng, ambient_dim, dim, field), field, cfg)


def random_unitary(rng: np.random.Generator, n: int, field: Field) -> np.ndarray:
    """Haar-distributed orthogonal (real) or unitary (complex) matrix,
    via QR with the phase-of-R correction."""
    Q, R = np.linalg.qr(gaussian_matrix(rng, n, n, field))
    d = np.diagonal(R)
    phase = d / np.abs(d)
    return Q * phase

def random_vector(rng: np.random.Generator, n: int, field: Field) -> np.ndarray:
    return gaussian_matrix(rng, n, 1, field)[:, 0]
