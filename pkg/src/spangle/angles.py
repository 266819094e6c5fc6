"""The production angle family, computed from principal angles.

The Grassmann angle of V with W is arccos of the product of principal
cosines when dim V <= dim W and pi/2 otherwise; the deliberate asymmetry
carries dimensional information and is what makes the triangle
inequality and the contraction/wedge norm formulas hold without side
conditions.  The complementary angle (against the orthogonal complement)
has the product of principal sines as its cosine.

Everything here is O(n^3) linear algebra; the exterior module provides
the independent exponential-cost oracle for the same quantities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_TOLERANCES,
    Field,
    ToleranceConfig,
    arccos_clamped,
    as_field_array,
    clamped_product,
    principal_phase,
    stack_columns,
)
from .principal import principal_cosines
from .subspace import Subspace, _check_pair, realify, sum_subspace, zero_subspace

HALF_PI = math.pi / 2

# Cosines above this band are indistinguishable from 1 at SVD backward
# error, so the corresponding angles count as exact zeros when forming
# products of sines (otherwise every genuinely shared direction would
# contribute a spurious sqrt(eps)-sized sine).
_ZERO_ANGLE_COS_BAND = 1.0 - 256.0 * np.finfo(np.float64).eps


def sines_from_cosines(sigma: np.ndarray) -> np.ndarray:
    """Sines of the angles whose cosines are given, with cosines inside
    the roundoff band at 1 treated as exact zero angles."""
    sines = np.sqrt(np.clip((1.0 - sigma) * (1.0 + sigma), 0.0, 1.0))
    sines[sigma >= _ZERO_ANGLE_COS_BAND] = 0.0
    return sines


def _angle_from_cos(value: float, cfg: ToleranceConfig) -> float:
    """arccos that returns an exact 0 inside the roundoff band at 1,
    so that contained/orthogonal configurations produce exact angles."""
    if value >= _ZERO_ANGLE_COS_BAND:
        return 0.0
    return arccos_clamped(value, cfg)


@dataclass(frozen=True)
class VectorAngles:
    """The angles between two vectors.

    theta     Euclidean angle in [0, pi] (real part of the inner product)
    gamma     Hermitian angle in [0, pi/2] (modulus of the inner product)
    zeta_cos  cosine of the complex angle: <v, w> / (|v| |w|)
    phase     phase difference in (-pi, pi], or None for orthogonal vectors
    """

    theta: float
    gamma: float
    zeta_cos: complex
    phase: float | None


@dataclass(frozen=True)
class OrientedAngle:
    """Angle between equal-dimension oriented subspaces.

    cos_value = exp(i phase) * cos(magnitude) is the inner product of the
    unit orientation blades; phase is None when the subspaces are
    partially orthogonal (cos_value numerically zero).  In the real case
    the phase is 0 or pi.
    """

    magnitude: float
    phase: float | None
    cos_value: complex


@dataclass(frozen=True)
class AngleReport:
    """Directed angle, complementary angle, symmetrizations and the
    volume-projection factor for one ordered pair of subspaces."""

    theta: float
    theta_perp: float
    theta_min_sym: float
    theta_max_sym: float
    projection_factor: float


def vector_angles(v, w, field: Field, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> VectorAngles:
    """All vector angles at once, with the zero-vector conventions
    theta(0, w) = 0 and theta(v, 0) = pi/2."""
    v = as_field_array(v, field)
    w = as_field_array(w, field)
    if v.shape != w.shape:
        raise ValueError(f"vector shape mismatch: {v.shape} vs {w.shape}")
    nv = float(np.linalg.norm(v))
    nw = float(np.linalg.norm(w))
    if nv == 0.0:
        return VectorAngles(theta=0.0, gamma=0.0, zeta_cos=_one(field), phase=None)
    if nw == 0.0:
        return VectorAngles(theta=HALF_PI, gamma=HALF_PI, zeta_cos=_zero(field), phase=None)
    ip = np.vdot(v, w)
    zeta_cos = complex(ip) / (nv * nw) if field is Field.COMPLEX else float(ip) / (nv * nw)
    cos_theta = (zeta_cos.real if field is Field.COMPLEX else zeta_cos)
    theta = math.acos(min(1.0, max(-1.0, cos_theta)))
    gamma = arccos_clamped(abs(zeta_cos), cfg)
    phase = principal_phase(complex(zeta_cos)) if abs(ip) > cfg.compare_tol else None
    return VectorAngles(theta=theta, gamma=gamma, zeta_cos=zeta_cos, phase=phase)


def _one(field: Field):
    return 1.0 + 0.0j if field is Field.COMPLEX else 1.0


def _zero(field: Field):
    return 0.0 + 0.0j if field is Field.COMPLEX else 0.0


def grassmann_angle(V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> float:
    """Directed angle of V with W, in [0, pi/2].

    arccos of the product of principal cosines when dim V <= dim W;
    pi/2 when dim V > dim W (including W = {0} with V nonzero); 0 when
    V = {0}.
    """
    _check_pair(V, W)
    if V.is_zero:
        return 0.0
    if V.dim > W.dim:
        return HALF_PI
    return _angle_from_cos(clamped_product(principal_cosines(V, W, cfg)), cfg)


def complementary_angle(V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> float:
    """Angle of V with the orthogonal complement of W, in [0, pi/2].

    Computed as arccos of the product of principal sines of (V, W); this
    equals the directed angle against complement(W) and is symmetric in
    V and W.  Zero when either subspace is {0}.
    """
    _check_pair(V, W)
    if V.is_zero or W.is_zero:
        return 0.0
    sines = sines_from_cosines(principal_cosines(V, W, cfg))
    return _angle_from_cos(clamped_product(sines), cfg)


def angle_from_complement(V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> float:
    """Directed angle of complement(V) with W, without forming the complement.

    Equals arccos of the product of sines of the *nonzero* principal
    angles when V + W spans the ambient space, and pi/2 otherwise.
    Symmetric under swapping V and W.
    """
    _check_pair(V, W)
    if V.is_zero or W.is_zero:
        raise ValueError("both subspaces must be nonzero")
    if sum_subspace(V, W, cfg).dim < V.ambient_dim:
        return HALF_PI
    sigma = principal_cosines(V, W, cfg)
    nonzero = sigma[sigma < 1.0 - cfg.compare_tol]  # skip intersection directions
    return _angle_from_cos(clamped_product(sines_from_cosines(nonzero)), cfg)


def min_symmetrized_angle(V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> float:
    return min(grassmann_angle(V, W, cfg), grassmann_angle(W, V, cfg))


def max_symmetrized_angle(V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> float:
    return max(grassmann_angle(V, W, cfg), grassmann_angle(W, V, cfg))


def projection_factor(V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> float:
    """Factor by which top-dimensional volumes of V contract when
    orthogonally projected on W: cos(angle) over the reals, cos^2 over
    the complexes (each principal cosine contracts two real axes)."""
    theta = grassmann_angle(V, W, cfg)
    c = math.cos(theta)
    return c * c if V.field is Field.COMPLEX else c


def real_complex_relation(
    V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES
) -> tuple[float, float]:
    """(cos of the complex angle, cos of the realified angle).

    The realified cosine is the square of the complex one; both values
    are returned so callers can check the relation at their tolerance.
    """
    if V.field is not Field.COMPLEX:
        raise ValueError("real_complex_relation expects COMPLEX subspaces")
    _check_pair(V, W)
    cos_complex = math.cos(grassmann_angle(V, W, cfg))
    cos_real = math.cos(grassmann_angle(realify(V), realify(W), cfg))
    return cos_complex, cos_real


@dataclass(frozen=True)
class OrientedSubspace:
    """A subspace together with an orientation.

    The orienting unit blade is ``coefficient`` times the wedge of the
    basis columns in order; ``coefficient`` has unit modulus (a sign in
    the real case, a phase in the complex one).
    """

    space: Subspace
    coefficient: complex = 1.0

    def __post_init__(self) -> None:
        c = complex(self.coefficient)
        if abs(abs(c) - 1.0) > 1e-9:
            raise ValueError("orientation coefficient must have unit modulus")
        if self.space.field is Field.REAL and abs(c.imag) > 1e-12:
            raise ValueError("a real subspace admits only +1/-1 orientation coefficients")
        object.__setattr__(self, "coefficient", c)


def oriented_from_spanning(
    vectors,
    field: Field,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    ambient_dim: int | None = None,
) -> OrientedSubspace:
    """Oriented subspace whose orientation is the wedge of the given
    ordered vectors (which must be independent)."""
    M = stack_columns(vectors, field, ambient_dim=ambient_dim)
    if M.shape[1] == 0:
        return OrientedSubspace(zero_subspace(M.shape[0], field), 1.0)
    Q, R = np.linalg.qr(M)
    diag = np.abs(np.diagonal(R))
    if float(np.min(diag)) <= cfg.rank_rel_tol * max(M.shape) * float(np.max(diag)):
        raise ValueError("orientation requires linearly independent vectors")
    det_r = np.prod(np.diagonal(R))
    coeff = det_r / abs(det_r)
    return OrientedSubspace(Subspace(M.shape[0], field, Q), complex(coeff))


def oriented_angle(
    V: OrientedSubspace, W: OrientedSubspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES
) -> OrientedAngle:
    """Oriented angle between equal-dimension oriented subspaces.

    cos_value is the inner product of the unit orientation blades, a
    determinant of the cross-Gram of the oriented bases; its modulus is
    the cosine of the (unoriented) directed angle and its argument the
    phase difference.
    """
    A, B = V.space, W.space
    _check_pair(A, B)
    if A.dim != B.dim:
        raise ValueError(f"oriented angles require equal dimensions, got {A.dim} and {B.dim}")
    gram = A.basis.conj().T @ B.basis
    det = np.linalg.det(gram).item() if A.dim else 1.0
    cos_value = np.conj(V.coefficient) * W.coefficient * det
    if A.field is Field.REAL:
        cos_value = complex(cos_value).real
    magnitude = arccos_clamped(abs(cos_value), cfg)
    phase = principal_phase(complex(cos_value)) if abs(cos_value) > cfg.compare_tol else None
    return OrientedAngle(magnitude=magnitude, phase=phase, cos_value=cos_value)


def angle_report(V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> AngleReport:
    forward = grassmann_angle(V, W, cfg)
    backward = grassmann_angle(W, V, cfg)
    return AngleReport(
        theta=forward,
        theta_perp=complementary_angle(V, W, cfg),
        theta_min_sym=min(forward, backward),
        theta_max_sym=max(forward, backward),
        projection_factor=projection_factor(V, W, cfg),
    )
