"""Randomized verification suites driven by the CLI and the test suite.

Each suite runs a family of identity checks over seeded random
configurations and reports, per identity, the number of trials, the
worst residual and a pass flag.  Residual tolerances are pinned here:
1e-9 for identities, 1e-12 for the joint-bound slack and the oriented
inequality slack, 1e-7 for comparisons of angles near the ends of the
arccos range (where double precision cannot do better).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dataclass_field

import numpy as np

from . import exterior
from .angles import (
    complementary_angle,
    grassmann_angle,
    oriented_angle,
    oriented_from_spanning,
)
from .gram import angle_from_gram, complementary_from_gram
from .identities import (
    check_coordinate_identity,
    check_line_partition,
    check_oriented_sum,
    check_principal_coordinate,
    characterize_principal_partition,
    complexifiability_obstruction,
    ComplexifiabilityVerdict,
    direct_sum_angle,
    partition_angle_product,
    theta_pair_feasibility,
)
from .linalg import Field
from .metrics import fubini_study, geodesic_point, sampled_directed_hausdorff
from .principal import (
    Partition,
    is_partially_orthogonal,
    is_principal_partition,
    principal_decomposition,
)
from .sampling import gaussian_matrix, haar_subspace, random_unitary, random_vector
from .subspace import (
    Subspace,
    complement,
    from_basis_matrix,
    from_spanning,
    intersect,
    project_subspace,
    realify,
    spans_equal,
    sum_subspace,
    zero_subspace,
)

RESIDUAL_TOL = 1e-9
SLACK_TOL = 1e-12
ANGLE_TOL = 1e-7
# Cosine agreement within RESIDUAL_TOL only pins the angles down to
# sqrt(2 * RESIDUAL_TOL) at the ends of [0, pi/2], where arccos is
# infinitely steep.  Blanket angle comparisons over schedules that
# include degenerate pairs assert exactly that implied bound; the sharp
# checks are the cosine-level ones plus the generic-regime angle check.
DEGENERATE_ANGLE_TOL = math.sqrt(2 * RESIDUAL_TOL)

SUITE_NAMES = ("pythagorean", "oriented", "metric-axioms", "oracle-equivalence", "bounds")


@dataclass
class CheckReport:
    name: str
    trials: int
    max_residual: float
    tolerance: float
    passed: bool
    note: str = ""

    def as_dict(self) -> dict:
        out = {
            "name": self.name,
            "trials": self.trials,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckReport] = dataclass_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }


class _Collector:
    """Accumulates worst residuals per named check."""

    def __init__(self, suite: str, trials: int):
        self.report = SuiteReport(suite=suite)
        self.trials = trials
        self._worst: dict[str, float] = {}
        self._counts: dict[str, int] = {}
        self._tols: dict[str, float] = {}

    def add(self, name: str, residual: float, tolerance: float = RESIDUAL_TOL) -> None:
        self._worst[name] = max(self._worst.get(name, 0.0), float(residual))
        self._counts[name] = self._counts.get(name, 0) + 1
        self._tols[name] = tolerance

    def vacuous(self, name: str, tolerance: float = RESIDUAL_TOL) -> None:
        if name not in self._worst:
            self._worst[name] = 0.0
            self._counts[name] = 0
            self._tols[name] = tolerance

    def finish(self) -> SuiteReport:
        for name in self._worst:
            trials = self._counts[name]
            self.report.checks.append(
                CheckReport(
                    name=name,
                    trials=trials,
                    max_residual=self._worst[name],
                    tolerance=self._tols[name],
                    passed=self._worst[name] <= self._tols[name],
                    note="0 trials: vacuous pass" if trials == 0 else "",
                )
            )
        return self.report


def _fields() -> tuple[Field, ...]:
    return (Field.REAL, Field.COMPLEX)


def _random_orthogonal_partition(rng, n: int, field: Field, max_parts: int = 4) -> list[Subspace]:
    """Split the ambient space along the columns of a random unitary."""
    T = random_unitary(rng, n, field)
    k = int(rng.integers(2, min(max_parts, n) + 1))
    cuts = sorted(rng.choice(np.arange(1, n), size=k - 1, replace=False).tolist()) if k > 1 else []
    bounds = [0] + cuts + [n]
    return [
        Subspace(n, field, np.ascontiguousarray(T[:, bounds[i]:bounds[i + 1]]))
        for i in range(len(bounds) - 1)
    ]


def _sub_subspace(rng, V: Subspace, k: int) -> Subspace:
    inner = haar_subspace(rng, V.dim, k, V.field)
    if k == 0:
        return zero_subspace(V.ambient_dim, V.field)
    return from_basis_matrix(V.basis @ inner.basis, V.field)


# ---------------------------------------------------------------------------
# pythagorean suite
# ---------------------------------------------------------------------------


def run_pythagorean(seed: int, trials: int, dim_max: int) -> SuiteReport:
    rng = np.random.default_rng(seed)
    col = _Collector("pythagorean", trials)
    dim_max = max(2, min(dim_max, 8))
    for _ in range(trials):
        for field in _fields():
            n = int(rng.integers(2, dim_max + 1))

            # Squared cosines of a line against an orthogonal partition sum to 1.
            parts = _random_orthogonal_partition(rng, n, field)
            L = haar_subspace(rng, n, 1, field)
            col.add("line_partition_sum", check_line_partition(L, parts).residual)

            # Coordinate q-subspace sums hit exact binomial targets.
            basis = random_unitary(rng, n, field)
            p = int(rng.integers(1, n + 1))
            V = haar_subspace(rng, n, p, field)
            q_hi = int(rng.integers(p, n + 1))
            col.add(
                "coordinate_sum_small_dim",
                check_coordinate_identity(V, basis, q_hi).residual,
            )
            if p > 1:
                q_lo = int(rng.integers(1, p))
                col.add(
                    "coordinate_sum_large_dim",
                    check_coordinate_identity(V, basis, q_lo).residual,
                )

            # Principal coordinate decomposition of cos^2 for U inside V.
            W = haar_subspace(rng, n, int(rng.integers(1, n + 1)), field)
            r = int(rng.integers(1, p + 1))
            U = _sub_subspace(rng, V, r)
            col.add("principal_coordinate_sum", check_principal_coordinate(U, V, W).residual)

            # Direct sums and partitions.
            if n >= 3:
                d1 = int(rng.integers(1, n - 1))
                d2 = int(rng.integers(1, n - d1))
                V1 = haar_subspace(rng, n, d1, field)
                V2 = haar_subspace(rng, n, d2, field)
                if intersect(V1, V2).is_zero:
                    col.add("direct_sum_product", direct_sum_angle(V1, V2, W).residual)
                    both = sum_subspace(V1, V2)
                    col.add(
                        "partition_product",
                        partition_angle_product(both, [V1, V2], W).residual,
                    )

            # Spherical Pythagorean relation through the projection.
            Wbig = haar_subspace(rng, n, int(rng.integers(1, n + 1)), field)
            U2 = _sub_subspace(rng, Wbig, int(rng.integers(0, Wbig.dim + 1)))
            V2b = haar_subspace(rng, n, int(rng.integers(0, n + 1)), field)
            PV = project_subspace(Wbig, V2b)
            lhs = math.cos(grassmann_angle(V2b, U2))
            rhs = math.cos(grassmann_angle(V2b, PV)) * math.cos(grassmann_angle(PV, U2))
            col.add("spherical_pythagorean", abs(lhs - rhs))

            # Product of sines equals the angle with the complement.
            A = haar_subspace(rng, n, int(rng.integers(1, n + 1)), field)
            B = haar_subspace(rng, n, int(rng.integers(1, n + 1)), field)
            col.add(
                "sines_vs_complement",
                abs(
                    math.cos(complementary_angle(A, B))
                    - math.cos(grassmann_angle(A, complement(B)))
                ),
            )

            # Symmetries of the complementary angle (cosine level, where
            # the identity is sharp).
            col.add(
                "complementary_symmetry",
                abs(
                    math.cos(complementary_angle(A, B))
                    - math.cos(complementary_angle(B, A))
                ),
            )
            col.add(
                "complement_pair_swap",
                abs(
                    math.cos(grassmann_angle(A, B))
                    - math.cos(grassmann_angle(complement(B), complement(A)))
                ),
            )

            # Principal partitions: product rule characterization agrees
            # with the projected-orthogonality predicate.
            if p >= 2 and not is_partially_orthogonal(V, W):
                decomp = principal_decomposition(V, W)
                split = int(rng.integers(1, p))
                P1 = Subspace(n, field, decomp.left_basis[:, :split])
                P2 = Subspace(n, field, decomp.left_basis[:, split:])
                agrees = characterize_principal_partition(V, [P1, P2], W)
                predicate = is_principal_partition(V, Partition([P1, P2]), W)
                col.add("principal_partition_characterization", 0.0 if agrees == predicate else 1.0)

    for name in (
        "line_partition_sum",
        "coordinate_sum_small_dim",
        "coordinate_sum_large_dim",
        "principal_coordinate_sum",
        "direct_sum_product",
        "partition_product",
        "spherical_pythagorean",
        "sines_vs_complement",
        "complementary_symmetry",
        "complement_pair_swap",
        "principal_partition_characterization",
    ):
        col.vacuous(name)
    return col.finish()


# ---------------------------------------------------------------------------
# oriented suite
# ---------------------------------------------------------------------------


def run_oriented(seed: int, trials: int, dim_max: int) -> SuiteReport:
    rng = np.random.default_rng(seed)
    col = _Collector("oriented", trials)
    dim_max = max(2, min(dim_max, 7))
    for _ in range(trials):
        for field in _fields():
            n = int(rng.integers(2, dim_max + 1))
            p = int(rng.integers(1, n + 1))
            V = oriented_from_spanning(
                [random_vector(rng, n, field) for _ in range(p)], field
            )
            W = oriented_from_spanning(
                [random_vector(rng, n, field) for _ in range(p)], field
            )
            basis = random_unitary(rng, n, field)
            check = check_oriented_sum(V, W, basis)
            col.add("oriented_coordinate_sum", check.identity.residual)
            col.add("oriented_cosine_bound_slack", max(0.0, -check.bound_slack), SLACK_TOL)

            # The modulus of the oriented cosine is the unoriented cosine,
            # and its real part factors through the phase.
            osame = oriented_angle(V, W)
            col.add(
                "oriented_modulus_consistency",
                abs(abs(osame.cos_value) - math.cos(grassmann_angle(V.space, W.space))),
            )
            if osame.phase is not None:
                col.add(
                    "oriented_phase_factorization",
                    abs(
                        complex(osame.cos_value).real
                        - math.cos(osame.phase) * math.cos(osame.magnitude)
                    ),
                )
    for name in (
        "oriented_coordinate_sum",
        "oriented_cosine_bound_slack",
        "oriented_modulus_consistency",
        "oriented_phase_factorization",
    ):
        col.vacuous(name)
    return col.finish()


# ---------------------------------------------------------------------------
# metric-axioms suite
# ---------------------------------------------------------------------------


def run_metric_axioms(seed: int, trials: int, dim_max: int) -> SuiteReport:
    rng = np.random.default_rng(seed)
    col = _Collector("metric-axioms", trials)
    dim_max = max(2, min(dim_max, 8))
    for _ in range(trials):
        for field in _fields():
            n = int(rng.integers(2, dim_max + 1))
            dims = rng.integers(0, n + 1, size=3)
            U = haar_subspace(rng, n, int(dims[0]), field)
            V = haar_subspace(rng, n, int(dims[1]), field)
            W = haar_subspace(rng, n, int(dims[2]), field)
            t_uv = grassmann_angle(U, V)
            t_vw = grassmann_angle(V, W)
            t_uw = grassmann_angle(U, W)
            col.add("triangle_inequality", max(0.0, t_uw - t_uv - t_vw))
            col.add(
                "reverse_bound",
                max(
                    0.0,
                    max(t_uv - grassmann_angle(W, V), t_vw - grassmann_angle(V, U)) - t_uw,
                ),
            )
            if dims[0] == dims[1] == dims[2]:
                col.add("equal_dim_reverse_bound", max(0.0, abs(t_uv - t_vw) - t_uw))

            # Identity of indiscernibles: same span iff both directed
            # distances vanish.  The re-spanning mix is kept well
            # conditioned; an ill-conditioned mix genuinely perturbs the
            # computed span beyond the zero band.
            if V.dim:
                mix = np.eye(V.dim, dtype=field.dtype) + 0.5 * gaussian_matrix(
                    rng, V.dim, V.dim, field
                )
                same = (
                    from_basis_matrix(V.basis @ mix, field)
                    if np.linalg.cond(mix) < 1e3
                    else V
                )
                col.add(
                    "indiscernibles_zero",
                    max(grassmann_angle(V, same), grassmann_angle(same, V)),
                )
            if not spans_equal(U, V) and not (U.is_zero and V.is_zero):
                both = max(grassmann_angle(U, V), grassmann_angle(V, U))
                col.add("indiscernibles_nonzero", 0.0 if both > 1e-8 else 1.0)

            # Cross-dimension Fubini-Study distance is exactly pi/2.
            if U.dim != V.dim:
                col.add("fubini_cross_dimension", abs(fubini_study(U, V) - math.pi / 2))

    # Geodesics on constructed codimension-1 pairs.
    geo_trials = max(1, min(trials, 100))
    for _ in range(geo_trials):
        for field in _fields():
            n = int(rng.integers(2, dim_max + 1))
            p = int(rng.integers(1, n))
            K = haar_subspace(rng, n, p - 1, field)
            u = random_vector(rng, n, field)
            w = random_vector(rng, n, field)
            U = from_spanning(
                [K.basis[:, j] for j in range(K.dim)] + [u], field, ambient_dim=n
            )
            W = from_spanning(
                [K.basis[:, j] for j in range(K.dim)] + [w], field, ambient_dim=n
            )
            if U.dim != p or W.dim != p or intersect(U, W).dim != p - 1:
                continue
            total = grassmann_angle(U, W)
            if total < 1e-3:
                continue
            col.add("geodesic_start", fubini_study(geodesic_point(U, W, 0.0), U), ANGLE_TOL)
            col.add("geodesic_endpoint", fubini_study(geodesic_point(U, W, total), W), ANGLE_TOL)
            mid = geodesic_point(U, W, total / 2)
            col.add("geodesic_midpoint_left", abs(grassmann_angle(U, mid) - total / 2), ANGLE_TOL)
            col.add("geodesic_midpoint_right", abs(grassmann_angle(mid, W) - total / 2), ANGLE_TOL)

    # Sampled directed Hausdorff never exceeds the closed form.
    hd_trials = max(1, min(trials, 20))
    for _ in range(hd_trials):
        for field in _fields():
            n = int(rng.integers(2, min(dim_max, 6) + 1))
            V = haar_subspace(rng, n, int(rng.integers(1, n + 1)), field)
            W = haar_subspace(rng, n, int(rng.integers(1, n + 1)), field)
            sampled = sampled_directed_hausdorff(V, W, rng, samples=40)
            col.add("hausdorff_sampled_bound", max(0.0, sampled - grassmann_angle(V, W)), ANGLE_TOL)

    for name in (
        "triangle_inequality",
        "reverse_bound",
        "equal_dim_reverse_bound",
        "indiscernibles_zero",
        "indiscernibles_nonzero",
        "fubini_cross_dimension",
        "geodesic_start",
        "geodesic_endpoint",
        "geodesic_midpoint_left",
        "geodesic_midpoint_right",
        "hausdorff_sampled_bound",
    ):
        col.vacuous(name)
    return col.finish()


# ---------------------------------------------------------------------------
# oracle-equivalence suite
# ---------------------------------------------------------------------------


def _dimension_schedule(rng, trials: int, dim_max: int):
    """All (n, p, q) combinations for small n first, then random draws."""
    out = []
    for n in range(2, min(dim_max, 5) + 1):
        for p in range(0, n + 1):
            for q in range(0, n + 1):
                out.append((n, p, q))
    while len(out) < trials:
        n = int(rng.integers(2, dim_max + 1))
        out.append((n, int(rng.integers(0, n + 1)), int(rng.integers(0, n + 1))))
    return out[:trials] if trials < len(out) else out


def run_oracle_equivalence(seed: int, trials: int, dim_max: int) -> SuiteReport:
    rng = np.random.default_rng(seed)
    col = _Collector("oracle-equivalence", trials)
    dim_max = max(2, min(dim_max, 8))
    for field in _fields():
        for n, p, q in _dimension_schedule(rng, trials, dim_max):
            V = haar_subspace(rng, n, p, field)
            W = haar_subspace(rng, n, q, field)
            basis_v = _skewed_list(rng, V, field)
            basis_w = _skewed_list(rng, W, field)
            theta_routes = {
                "fast": grassmann_angle(V, W),
                "projection_oracle": exterior.oracle_grassmann_angle(V, W),
                "contraction_oracle": exterior.oracle_contraction_angle(V, W),
                "gram": angle_from_gram(basis_v, basis_w, field, ambient_dim=n),
            }
            perp_routes = {
                "fast": complementary_angle(V, W),
                "wedge_oracle": exterior.oracle_complementary_angle(V, W),
                "gram": complementary_from_gram(basis_v, basis_w, field, ambient_dim=n),
            }
            _add_route_agreement(col, "theta", theta_routes)
            _add_route_agreement(col, "theta_perp", perp_routes)
            col.add(
                "contraction_vs_projection_oracle",
                abs(
                    math.cos(theta_routes["contraction_oracle"])
                    - math.cos(theta_routes["projection_oracle"])
                ),
                1e-10,
            )
    for name in (
        "theta_cosine_agreement",
        "theta_angle_agreement",
        "theta_angle_agreement_generic",
        "theta_perp_cosine_agreement",
        "theta_perp_angle_agreement",
        "theta_perp_angle_agreement_generic",
        "contraction_vs_projection_oracle",
    ):
        col.vacuous(name)
    return col.finish()


def _add_route_agreement(col: _Collector, label: str, routes: dict[str, float]) -> None:
    """Cross-route agreement: cosines at the identity tolerance (sharp
    everywhere), raw angles at the arccos-conditioning tolerance, and raw
    angles at the identity tolerance away from the ends of [0, pi/2],
    where arccos in double precision resolves them."""
    values = list(routes.values())
    angle_spread = max(values) - min(values)
    cos_spread = max(math.cos(v) for v in values) - min(math.cos(v) for v in values)
    col.add(f"{label}_cosine_agreement", cos_spread)
    col.add(f"{label}_angle_agreement", angle_spread, DEGENERATE_ANGLE_TOL)
    if 1e-4 < min(values) and max(values) < math.pi / 2 - 1e-4:
        col.add(f"{label}_angle_agreement_generic", angle_spread)


def _skewed_list(rng, V: Subspace, field: Field) -> list[np.ndarray]:
    """Spanning list of V mixed by a well-conditioned random matrix."""
    if V.is_zero:
        return []
    mix = np.eye(V.dim, dtype=field.dtype) + 0.4 * gaussian_matrix(rng, V.dim, V.dim, field)
    if np.linalg.cond(mix) > 1e3:
        mix = np.eye(V.dim, dtype=field.dtype)
    skewed = V.basis @ mix
    return [skewed[:, j] for j in range(skewed.shape[1])]


# ---------------------------------------------------------------------------
# bounds suite
# ---------------------------------------------------------------------------


def run_bounds(seed: int, trials: int, dim_max: int) -> SuiteReport:
    rng = np.random.default_rng(seed)
    col = _Collector("bounds", trials)
    dim_max = max(2, min(dim_max, 8))
    for _ in range(trials):
        for field in _fields():
            n = int(rng.integers(2, dim_max + 1))
            p = int(rng.integers(1, n + 1))
            q = int(rng.integers(0, n + 1))
            V = haar_subspace(rng, n, p, field)
            W = haar_subspace(rng, n, q, field)
            report = theta_pair_feasibility(V, W)
            col.add("cos_sq_sum_upper", max(0.0, report.cos_sq_sum - 1.0), SLACK_TOL)
            col.add("cos_sq_sum_lower", max(0.0, -report.cos_sq_sum), SLACK_TOL)
            # The angle-sum bounds are equivalent to the squared-cosine
            # bound (cos is decreasing on [0, pi]); the literal sums are
            # checked at the arccos-conditioning tolerance.
            col.add("angle_sum_lower", max(0.0, math.pi / 2 - report.angle_sum), ANGLE_TOL)
            col.add("angle_sum_upper", max(0.0, report.angle_sum - math.pi), ANGLE_TOL)
            if report.delta is not None:
                cos_sum = report.cos_theta + report.cos_theta_perp
                if p == 1:
                    col.add("dim1_cos_sum_lower", max(0.0, 1.0 - cos_sum), SLACK_TOL)
                    # Exact complementarity, cross-checked against the
                    # independent definitional route through the complement.
                    col.add(
                        "dim1_exact_complementarity",
                        abs(
                            math.cos(report.theta_perp)
                            - math.cos(grassmann_angle(V, complement(W)))
                        ),
                        SLACK_TOL,
                    )
                elif p == 2:
                    col.add("dim2_cos_sum_equality", abs(cos_sum - report.cos_delta), SLACK_TOL)
                else:
                    col.add(
                        "cos_sum_spread_bound",
                        max(0.0, cos_sum - report.cos_delta),
                        SLACK_TOL,
                    )
            col.add("feasibility_violations", float(len(report.violations)), 0.0)

            # Norm identity tying the wedge of two blades to the
            # complementary/ordinary angle ratio (equal-dim disjoint pairs).
            if n <= 8:
                r = int(rng.integers(1, n // 2 + 1))
                lists = [
                    [random_vector(rng, n, field) for _ in range(r)] for _ in range(2)
                ]
                V1 = from_spanning(lists[0], field, ambient_dim=n)
                V2 = from_spanning(lists[1], field, ambient_dim=n)
                if V1.dim == r and V2.dim == r and intersect(V1, V2).is_zero:
                    col.add("wedge_norm_identity", _miao_ben_israel_residual(lists[0], lists[1], V1, V2, field))
                    theta = grassmann_angle(V1, V2)
                    theta_perp = complementary_angle(V1, V2)
                    if math.sin(theta) > 1e-6:
                        ratio = math.cos(theta_perp) ** 2 / math.sin(theta) ** 2
                        col.add("wedge_ratio_bound", max(0.0, ratio - 1.0), SLACK_TOL)

    # Realifications of genuinely complex pairs are never obstructed.
    pair_trials = max(1, min(trials, 100))
    for _ in range(pair_trials):
        n = int(rng.integers(2, min(dim_max, 4) + 1))
        p = int(rng.integers(1, n + 1))
        q = int(rng.integers(1, n + 1))
        Vc = haar_subspace(rng, n, p, Field.COMPLEX)
        Wc = haar_subspace(rng, n, q, Field.COMPLEX)
        verdict = complexifiability_obstruction(realify(Vc), realify(Wc))
        col.add(
            "realified_pair_inconclusive",
            0.0 if verdict is ComplexifiabilityVerdict.INCONCLUSIVE else 1.0,
            0.0,
        )

    for name in (
        "cos_sq_sum_upper",
        "cos_sq_sum_lower",
        "angle_sum_lower",
        "angle_sum_upper",
        "dim1_cos_sum_lower",
        "dim1_exact_complementarity",
        "dim2_cos_sum_equality",
        "cos_sum_spread_bound",
        "feasibility_violations",
        "wedge_norm_identity",
        "wedge_ratio_bound",
        "realified_pair_inconclusive",
    ):
        col.vacuous(name)
    return col.finish()


def _miao_ben_israel_residual(list1, list2, V1: Subspace, V2: Subspace, field: Field) -> float:
    nu1 = exterior.scalar_multivector(V1.ambient_dim, field)
    for v in list1:
        nu1 = exterior.wedge_vector(nu1, v)
    nu2 = exterior.scalar_multivector(V1.ambient_dim, field)
    for v in list2:
        nu2 = exterior.wedge_vector(nu2, v)
    lhs = exterior.wedge(nu1, nu2).norm ** 2
    g11 = exterior.inner(nu1, nu1)
    g12 = exterior.inner(nu1, nu2)
    g22 = exterior.inner(nu2, nu2)
    gram_det = float(np.real(g11 * g22 - g12 * np.conj(g12)))
    theta = grassmann_angle(V1, V2)
    theta_perp = complementary_angle(V1, V2)
    if math.sin(theta) < 1e-9:
        return 0.0
    rhs = gram_det * math.cos(theta_perp) ** 2 / math.sin(theta) ** 2
    scale = max(1.0, abs(lhs))
    return abs(lhs - rhs) / scale


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

_RUNNERS = {
    "pythagorean": run_pythagorean,
    "oriented": run_oriented,
    "metric-axioms": run_metric_axioms,
    "oracle-equivalence": run_oracle_equivalence,
    "bounds": run_bounds,
}


def run_suites(suite: str, seed: int, trials: int, dim_max: int) -> list[SuiteReport]:
    """Run one named suite, or all of them."""
    if suite == "all":
        return [run(seed, trials, dim_max) for run in _RUNNERS.values()]
    if suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)} or 'all'")
    return [_RUNNERS[suite](seed, trials, dim_max)]
