"""Executable checks for the summation/product identities and bounds.

Each check computes both sides of one identity and reports them with the
residual; the randomized harnesses in the verification suites drive
these over seeded configurations.  Binomial targets are integer-exact.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .angles import (
    OrientedSubspace,
    complementary_angle,
    grassmann_angle,
    oriented_angle,
    sines_from_cosines,
)
from .linalg import DEFAULT_TOLERANCES, Field, ToleranceConfig, clamped_product
from .principal import (
    is_partially_orthogonal,
    principal_angles,
    principal_cosines,
    principal_decomposition,
)
from .subspace import (
    Subspace,
    _check_pair,
    intersect,
    is_subspace_of,
    project_subspace,
    spans_equal,
    sum_subspace,
)

HALF_PI = math.pi / 2


@dataclass(frozen=True)
class IdentityResult:
    """Both sides of one identity instance.  lhs/rhs may be complex for
    oriented identities; the residual is always |lhs - rhs|."""

    lhs: complex
    rhs: complex
    residual: float
    passed: bool


def _result(lhs, rhs, tol: float) -> IdentityResult:
    residual = abs(lhs - rhs)
    return IdentityResult(lhs=lhs, rhs=rhs, residual=float(residual), passed=bool(residual <= tol))


@dataclass(frozen=True)
class AngularRange:
    """Smallest and largest achievable angle between a direction of the
    first subspace and the second, plus their spread."""

    theta_min: float
    theta_max: float
    delta: float


def angular_range(V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> AngularRange:
    """theta_min is the smallest principal angle; theta_max is the largest
    when dim V <= dim W and pi/2 otherwise."""
    _check_pair(V, W)
    if V.is_zero or W.is_zero:
        raise ValueError("the angular range requires nonzero subspaces")
    angles = principal_angles(V, W, cfg)
    theta_min = float(angles[0])
    theta_max = float(angles[-1]) if V.dim <= W.dim else HALF_PI
    return AngularRange(theta_min=theta_min, theta_max=theta_max, delta=theta_max - theta_min)


def _check_orthogonal_partition(parts, total_dim: int, what: str, cfg: ToleranceConfig) -> None:
    dims = sum(p.dim for p in parts)
    if dims != total_dim:
        raise ValueError(f"partition does not span {what}: dimensions sum to {dims}, need {total_dim}")
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if parts[i].dim == 0 or parts[j].dim == 0:
                continue
            cross = parts[i].basis.conj().T @ parts[j].basis
            if float(np.max(np.abs(cross))) > cfg.compare_tol:
                raise ValueError(f"partition of {what} is not orthogonal")


def check_line_partition(
    L: Subspace, parts, cfg: ToleranceConfig = DEFAULT_TOLERANCES, tol: float = 1e-9
) -> IdentityResult:
    """Squared cosines of a line against an orthogonal partition of the
    ambient space sum to 1."""
    if L.dim != 1:
        raise ValueError(f"expected a line, got dimension {L.dim}")
    for p in parts:
        _check_pair(L, p)
    _check_orthogonal_partition(parts, L.ambient_dim, "the ambient space", cfg)
    lhs = sum(math.cos(grassmann_angle(L, Wi, cfg)) ** 2 for Wi in parts)
    return _result(lhs, 1.0, tol)


def coordinate_subspaces(basis: np.ndarray, q: int, field: Field, cfg: ToleranceConfig = DEFAULT_TOLERANCES):
    """All q-column coordinate subspaces of an orthogonal basis, in
    lexicographic index order (matching the bit-mask order of the
    exterior module).  Yields (indices, Subspace)."""
    n = basis.shape[1]
    norms = np.linalg.norm(basis, axis=0)
    if np.any(norms == 0):
        raise ValueError("basis contains a zero vector")
    unit = basis / norms
    cross = np.abs(unit.conj().T @ unit - np.eye(n))
    if float(np.max(cross)) > 1e-9:
        raise ValueError("basis is not orthogonal")
    for combo in itertools.combinations(range(n), q):
        cols = unit[:, list(combo)] if combo else np.zeros((basis.shape[0], 0), dtype=unit.dtype)
        yield combo, Subspace(basis.shape[0], field, cols)


def check_coordinate_identity(
    V: Subspace,
    basis: np.ndarray,
    q: int,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    tol: float = 1e-9,
) -> IdentityResult:
    """Sum of squared cosines against all coordinate q-subspaces of an
    orthogonal ambient basis.

    For p = dim V <= q the sum over angle(V, W_I) equals C(n-p, n-q);
    for p > q the sum over angle(W_I, V) equals C(p, q).
    """
    basis = np.asarray(basis, dtype=V.field.dtype)
    if basis.shape != (V.ambient_dim, V.ambient_dim):
        raise ValueError(f"basis must be square of size {V.ambient_dim}, got {basis.shape}")
    n, p = V.ambient_dim, V.dim
    total = 0.0
    if p <= q:
        for _, W_I in coordinate_subspaces(basis, q, V.field, cfg):
            total += math.cos(grassmann_angle(V, W_I, cfg)) ** 2
        target = float(math.comb(n - p, n - q))
    else:
        for _, W_I in coordinate_subspaces(basis, q, V.field, cfg):
            total += math.cos(grassmann_angle(W_I, V, cfg)) ** 2
        target = float(math.comb(p, q))
    return _result(total, target, tol)


@dataclass(frozen=True)
class OrientedSumCheck:
    """Oriented reconstruction identity plus the unoriented upper bound."""

    identity: IdentityResult
    bound_slack: float  # sum of |cos| products minus cos(angle); must be >= 0


def check_oriented_sum(
    V: OrientedSubspace,
    W: OrientedSubspace,
    basis: np.ndarray,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    tol: float = 1e-9,
) -> OrientedSumCheck:
    """The oriented angle cosine equals the sum, over the coordinate
    p-subspaces of an orthogonal basis, of cos(V, X_I) * cos(X_I, W)
    (oriented cosines, order matters in the complex case).  Also reports
    the slack of the unoriented inequality with both cosines towards X_I.
    """
    p = V.space.dim
    if p != W.space.dim:
        raise ValueError("oriented identity requires equal dimensions")
    lhs = oriented_angle(V, W, cfg).cos_value
    total = 0.0 + 0.0j if V.space.field is Field.COMPLEX else 0.0
    bound_total = 0.0
    for _, X_I in coordinate_subspaces(np.asarray(basis, dtype=V.space.field.dtype), p, V.space.field, cfg):
        X_oriented = OrientedSubspace(X_I, 1.0)
        left = oriented_angle(V, X_oriented, cfg).cos_value
        right = oriented_angle(X_oriented, W, cfg).cos_value
        total += left * right
        bound_total += abs(left) * abs(right)
    identity = _result(lhs, total, tol)
    slack = bound_total - abs(lhs)
    return OrientedSumCheck(identity=identity, bound_slack=float(slack))


def check_principal_coordinate(
    U: Subspace,
    V: Subspace,
    W: Subspace,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    tol: float = 1e-9,
) -> IdentityResult:
    """For U inside V, the squared cosine towards W decomposes over the
    coordinate r-subspaces of a principal basis of V with respect to W as
    a weighted average: sum of cos^2(U, V_I) * cos^2(V_I, W)."""
    _check_pair(U, V)
    _check_pair(V, W)
    if V.is_zero or W.is_zero:
        raise ValueError("the decomposition requires nonzero V and W")
    if not is_subspace_of(U, V, cfg):
        raise ValueError("U must be contained in V")
    r = U.dim
    decomp = principal_decomposition(V, W, cfg)
    lhs = math.cos(grassmann_angle(U, W, cfg)) ** 2
    total = 0.0
    for combo in itertools.combinations(range(V.dim), r):
        cols = decomp.left_basis[:, list(combo)] if combo else np.zeros((V.ambient_dim, 0), dtype=V.field.dtype)
        V_I = Subspace(V.ambient_dim, V.field, cols)
        w_angle = math.cos(grassmann_angle(V_I, W, cfg)) ** 2
        u_angle = math.cos(grassmann_angle(U, V_I, cfg)) ** 2
        total += u_angle * w_angle
    return _result(lhs, total, tol)


def direct_sum_angle(
    V1: Subspace,
    V2: Subspace,
    W: Subspace,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    tol: float = 1e-9,
) -> IdentityResult:
    """cos(V1 + V2, W) as the product of the individual cosines times the
    ratio of complementary cosines of the projections and the summands.
    Both sides vanish together when either summand is partially
    orthogonal to W."""
    _check_pair(V1, V2)
    _check_pair(V1, W)
    if not intersect(V1, V2, cfg).is_zero:
        raise ValueError("summands must be disjoint")
    direct = sum_subspace(V1, V2, cfg)
    lhs = math.cos(grassmann_angle(direct, W, cfg))
    c1 = math.cos(grassmann_angle(V1, W, cfg))
    c2 = math.cos(grassmann_angle(V2, W, cfg))
    if c1 <= cfg.compare_tol or c2 <= cfg.compare_tol:
        rhs = 0.0
    else:
        P1 = project_subspace(W, V1, cfg)
        P2 = project_subspace(W, V2, cfg)
        numerator = math.cos(complementary_angle(P1, P2, cfg))
        denominator = math.cos(complementary_angle(V1, V2, cfg))
        rhs = c1 * c2 * numerator / denominator
    return _result(lhs, rhs, tol)


def partition_angle_product(
    V: Subspace,
    parts,
    W: Subspace,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    tol: float = 1e-9,
) -> IdentityResult:
    """Partition form of the direct-sum identity: the cosine towards W is
    the product over parts, corrected by the telescoping ratio of
    complementary cosines of projected and original tails."""
    _check_pair(V, W)
    parts = list(parts)
    if not parts:
        raise ValueError("partition must have at least one part")
    joined = parts[0]
    for p in parts[1:]:
        if not intersect(joined, p, cfg).is_zero:
            raise ValueError("partition parts are not disjoint")
        joined = sum_subspace(joined, p, cfg)
    if not spans_equal(joined, V, cfg):
        raise ValueError("partition parts do not sum to V")
    lhs = math.cos(grassmann_angle(V, W, cfg))
    rhs = 1.0
    for part in parts:
        rhs *= math.cos(grassmann_angle(part, W, cfg))
    if rhs > 0.0:
        for i in range(len(parts) - 1):
            tail = parts[i + 1]
            for p in parts[i + 2:]:
                tail = sum_subspace(tail, p, cfg)
            P_head = project_subspace(W, parts[i], cfg)
            P_tail = project_subspace(W, tail, cfg)
            numerator = math.cos(complementary_angle(P_head, P_tail, cfg))
            denominator = math.cos(complementary_angle(parts[i], tail, cfg))
            rhs *= numerator / denominator
    return _result(lhs, rhs, tol)


def characterize_principal_partition(
    V: Subspace,
    parts,
    W: Subspace,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    tol: float = 1e-9,
) -> bool:
    """A partition of V (orthogonal, V not partially orthogonal to W) is
    principal with respect to W exactly when the cosine towards W is the
    plain product of the parts' cosines."""
    _check_pair(V, W)
    if is_partially_orthogonal(V, W, cfg):
        raise ValueError("V must not be partially orthogonal to W")
    parts = list(parts)
    _check_orthogonal_partition(parts, V.dim, "V", cfg)
    joined = parts[0]
    for p in parts[1:]:
        joined = sum_subspace(joined, p, cfg)
    if not spans_equal(joined, V, cfg):
        raise ValueError("partition parts do not sum to V")
    lhs = math.cos(grassmann_angle(V, W, cfg))
    rhs = 1.0
    for part in parts:
        rhs *= math.cos(grassmann_angle(part, W, cfg))
    return abs(lhs - rhs) <= tol


@dataclass(frozen=True)
class FeasibilityReport:
    """Evaluation of the joint bounds on the angle and its complementary
    angle, with the equality-case attribution when one is within
    tolerance.

    cos_theta / cos_theta_perp / cos_delta carry the singular-value-level
    cosines (sharper than re-taking cos of the reported angles near the
    ends of the range)."""

    dim: int
    theta: float
    theta_perp: float
    delta: float | None
    cos_theta: float
    cos_theta_perp: float
    cos_delta: float | None
    cos_sq_sum: float
    angle_sum: float
    violations: tuple[str, ...]
    equality_cases: frozenset[str]
    equal_angle_curve_residual: float | None


def _angle_profile(V: Subspace, W: Subspace, cfg: ToleranceConfig):
    """(cos theta, cos theta_perp, robust cos of the angular spread).

    Everything is computed at the singular-value level; in particular the
    spread cosine uses the angle-difference expansion on the extreme
    cosine/sine pairs instead of differencing two arccos values, which
    would lose sqrt(eps) near zero angles.
    """
    sigma = principal_cosines(V, W, cfg)
    sines = sines_from_cosines(sigma)
    cos_theta_perp = clamped_product(sines)
    if V.dim <= W.dim:
        cos_theta = clamped_product(sigma)
        cos_delta = float(sigma[-1] * sigma[0] + sines[-1] * sines[0])
    else:
        cos_theta = 0.0
        cos_delta = float(sines[0])  # largest angle is a right angle
    return sigma, sines, cos_theta, cos_theta_perp, min(cos_delta, 1.0)


def theta_pair_feasibility(
    V: Subspace,
    W: Subspace,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    tol: float = 1e-12,
) -> FeasibilityReport:
    """Check every applicable bound tying the directed and complementary
    angles together, flagging violations beyond ``tol``.

    dim 1: the two angles are exact complements and the cosines sum to at
    least 1.  dim 2: the cosine sum equals cos of the angular spread.
    dim > 2: the cosine sum is at most cos of the spread, with equality
    attributed to the boundary configurations A (all but one principal
    angle right), B (all but one zero) or C (full spread).
    """
    _check_pair(V, W)
    if V.is_zero:
        raise ValueError("feasibility bounds require a nonzero first subspace")
    theta = grassmann_angle(V, W, cfg)
    theta_perp = complementary_angle(V, W, cfg)
    p = V.dim
    violations: list[str] = []
    cases: set[str] = set()

    cos_sq_sum = math.cos(theta) ** 2 + math.cos(theta_perp) ** 2
    angle_sum = theta + theta_perp
    # Angle sums inherit the arccos conditioning near degenerate inputs,
    # so they get a looser threshold than the well-conditioned cosine sums.
    angle_tol = max(tol, 1e-7)
    if cos_sq_sum > 1.0 + tol:
        violations.append("cos_sq_sum_above_1")
    if cos_sq_sum < -tol:
        violations.append("cos_sq_sum_below_0")
    if angle_sum < HALF_PI - angle_tol:
        violations.append("angle_sum_below_half_pi")
    if angle_sum > math.pi + angle_tol:
        violations.append("angle_sum_above_pi")

    delta = None
    curve_residual = None
    cos_theta = math.cos(theta)
    cos_theta_perp = math.cos(theta_perp)
    cos_delta = None
    if not W.is_zero:
        spread = angular_range(V, W, cfg)
        delta = spread.delta
        sigma, sines, cos_theta, cos_theta_perp, cos_delta = _angle_profile(V, W, cfg)
        cos_sum = cos_theta + cos_theta_perp
        if p == 1:
            if abs(cos_theta_perp - float(sines[0])) > tol:
                violations.append("dim1_complement_not_exact")
            if cos_sum < 1.0 - tol:
                violations.append("dim1_cos_sum_below_1")
        elif p == 2:
            if abs(cos_sum - cos_delta) > tol:
                violations.append("dim2_cos_sum_not_equal_spread")
            if angle_sum < HALF_PI + delta - angle_tol:
                violations.append("dim2_angle_sum_below_bound")
        else:
            if cos_sum > cos_delta + tol:
                violations.append("cos_sum_above_spread")
            if angle_sum < HALF_PI + delta - angle_tol:
                violations.append("angle_sum_below_bound")
            if abs(cos_sum - cos_delta) <= cfg.compare_tol:
                m = sigma.size
                near_zero = sigma >= 1.0 - cfg.compare_tol
                near_right = sigma <= cfg.compare_tol
                if np.count_nonzero(near_right) >= m - 1:
                    cases.add("A")
                if np.count_nonzero(near_zero) >= p - 1:
                    cases.add("B")
                if near_zero[0] and (V.dim > W.dim or near_right[-1]):
                    cases.add("C")
        if delta <= cfg.compare_tol:
            # Exploratory: with all principal angles equal the pair sits on
            # the curve cos(theta)^(2/p) + cos(theta_perp)^(2/p) = 1.
            curve_residual = abs(
                cos_theta ** (2.0 / p) + cos_theta_perp ** (2.0 / p) - 1.0
            )

    return FeasibilityReport(
        dim=p,
        theta=theta,
        theta_perp=theta_perp,
        delta=delta,
        cos_theta=cos_theta,
        cos_theta_perp=cos_theta_perp,
        cos_delta=cos_delta,
        cos_sq_sum=cos_sq_sum,
        angle_sum=angle_sum,
        violations=tuple(violations),
        equality_cases=frozenset(cases),
        equal_angle_curve_residual=curve_residual,
    )


class ComplexifiabilityVerdict(enum.Enum):
    OBSTRUCTED = "obstructed"
    INCONCLUSIVE = "inconclusive"


def complexifiability_obstruction(
    V: Subspace,
    W: Subspace,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    tol: float = 1e-9,
) -> ComplexifiabilityVerdict:
    """Necessary condition for two even-dimensional real subspaces to be
    made simultaneously complex by one compatible complex structure.

    dim V = 4: obstructed unless sqrt(cos) + sqrt(cos_perp) equals
    cos(spread).  dim V > 4: obstructed when the sum strictly exceeds it.
    The criterion is necessary, never sufficient, so the other outcome is
    INCONCLUSIVE.  Pairs realified from genuinely complex subspaces are
    complexifiable by construction and must come out INCONCLUSIVE.
    """
    _check_pair(V, W)
    if V.field is not Field.REAL:
        raise ValueError("the obstruction applies to REAL subspaces")
    if V.is_zero:
        raise ValueError("V must be nonzero")
    if V.dim % 2 or W.dim % 2 or V.ambient_dim % 2:
        raise ValueError("all dimensions must be even")
    if V.dim <= 2 or W.is_zero:
        return ComplexifiabilityVerdict.INCONCLUSIVE
    _, _, cos_theta, cos_theta_perp, cos_delta = _angle_profile(V, W, cfg)
    lhs = math.sqrt(cos_theta) + math.sqrt(cos_theta_perp)
    if V.dim == 4:
        if abs(lhs - cos_delta) > tol:
            return ComplexifiabilityVerdict.OBSTRUCTED
    else:
        if lhs > cos_delta + tol:
            return ComplexifiabilityVerdict.OBSTRUCTED
    return ComplexifiabilityVerdict.INCONCLUSIVE
