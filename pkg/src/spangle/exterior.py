"""Dense exterior algebra over a small ambient space: the verification oracle.

Multivector coefficients sit in an array of length 2^n indexed by bit
masks of {0, ..., n-1}; the coordinate blades of an orthonormal ambient
basis are an orthonormal basis of the algebra, so norms and inner
products are plain vector operations on the coefficients.  Signs come
from transposition parity computed off popcounts.

Everything here is deliberately exponential and capped (n <= 12 real,
n <= 10 complex): it exists to cross-check the production angle paths at
desk scale, not to compute at production scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .linalg import (
    DEFAULT_TOLERANCES,
    Field,
    ToleranceConfig,
    arccos_clamped,
    as_field_array,
)
from .subspace import Subspace

REAL_AMBIENT_CAP = 12
COMPLEX_AMBIENT_CAP = 10


def ambient_cap(field: Field) -> int:
    return COMPLEX_AMBIENT_CAP if field is Field.COMPLEX else REAL_AMBIENT_CAP


def _check_cap(n: int, field: Field) -> None:
    cap = ambient_cap(field)
    if n > cap:
        raise ValueError(
            f"ambient dimension {n} exceeds the {field.value} exterior-algebra cap of {cap}"
        )


def shuffle_sign(mask_a: int, mask_b: int) -> int:
    """Sign of reordering the concatenation (A, B) of disjoint index sets
    into ascending order: parity of the number of pairs a > b."""
    sign = 1
    b = mask_b
    while b:
        low = b & -b
        j = low.bit_length() - 1
        if (mask_a >> (j + 1)).bit_count() & 1:
            sign = -sign
        b ^= low
    return sign


@lru_cache(maxsize=None)
def _grades(n: int) -> np.ndarray:
    return np.bitwise_count(np.arange(1 << n, dtype=np.uint64)).astype(np.int64)


@lru_cache(maxsize=None)
def _right_wedge_tables(n: int):
    """Per-index scatter tables for blade := blade ^ e_j.

    For each j: (src, dst, sign) with dst = src | bit_j over all masks src
    not containing j, and sign the parity of the bits of src above j.
    """
    all_masks = np.arange(1 << n, dtype=np.int64)
    tables = []
    for j in range(n):
        src = all_masks[(all_masks >> j) & 1 == 0]
        dst = src | (1 << j)
        above = np.bitwise_count((src >> (j + 1)).astype(np.uint64)).astype(np.int64)
        sign = 1 - 2 * (above & 1)
        tables.append((src, dst, sign))
    return tables


@dataclass(frozen=True)
class Multivector:
    """A graded element of the exterior algebra over the ambient space."""

    ambient_dim: int
    field: Field
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        _check_cap(self.ambient_dim, self.field)
        coeffs = as_field_array(self.coeffs, self.field)
        if coeffs.shape != (1 << self.ambient_dim,):
            raise ValueError(
                f"coefficient array must have length {1 << self.ambient_dim}, got {coeffs.shape}"
            )
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def grades(self) -> list[int]:
        """Grades with a nonzero component."""
        nz = np.nonzero(self.coeffs)[0]
        return sorted(set(int(g) for g in _grades(self.ambient_dim)[nz]))

    def grade_component(self, p: int) -> "Multivector":
        mask = _grades(self.ambient_dim) == p
        out = np.where(mask, self.coeffs, 0)
        return Multivector(self.ambient_dim, self.field, out)

    def scale(self, c) -> "Multivector":
        return Multivector(self.ambient_dim, self.field, self.coeffs * c)

    def add(self, other: "Multivector") -> "Multivector":
        _check_match(self, other)
        return Multivector(self.ambient_dim, self.field, self.coeffs + other.coeffs)


def _check_match(a: Multivector, b: Multivector) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}")
    if a.field is not b.field:
        raise ValueError(f"field mismatch: {a.field.value} vs {b.field.value}")


def zero_multivector(n: int, field: Field) -> Multivector:
    return Multivector(n, field, np.zeros(1 << n, dtype=field.dtype))


def scalar_multivector(n: int, field: Field, value=1.0) -> Multivector:
    coeffs = np.zeros(1 << n, dtype=field.dtype)
    coeffs[0] = value
    return Multivector(n, field, coeffs)


def basis_blade(n: int, field: Field, mask: int, value=1.0) -> Multivector:
    coeffs = np.zeros(1 << n, dtype=field.dtype)
    coeffs[mask] = value
    return Multivector(n, field, coeffs)


def from_vector(v, field: Field) -> Multivector:
    v = as_field_array(v, field)
    n = v.shape[0]
    _check_cap(n, field)
    coeffs = np.zeros(1 << n, dtype=field.dtype)
    for i in range(n):
        coeffs[1 << i] = v[i]
    return Multivector(n, field, coeffs)


def _wedge_vector_coeffs(coeffs: np.ndarray, v: np.ndarray, n: int) -> np.ndarray:
    """Coefficients of (multivector ^ vector)."""
    out = np.zeros_like(coeffs)
    for j in range(n):
        vj = v[j]
        if vj == 0:
            continue
        src, dst, sign = _right_wedge_tables(n)[j]
        out[dst] += coeffs[src] * sign * vj
    return out


def wedge_vector(x: Multivector, v) -> Multivector:
    """x ^ v for an ambient vector v (fast path used to assemble blades)."""
    v = as_field_array(v, x.field)
    if v.shape != (x.ambient_dim,):
        raise ValueError(f"vector has shape {v.shape}, expected ({x.ambient_dim},)")
    return Multivector(x.ambient_dim, x.field, _wedge_vector_coeffs(x.coeffs, v, x.ambient_dim))


def wedge(a: Multivector, b: Multivector) -> Multivector:
    """Exterior product, bilinear and graded-anticommutative."""
    _check_match(a, b)
    out = np.zeros_like(a.coeffs)
    nz_a = np.nonzero(a.coeffs)[0]
    nz_b = np.nonzero(b.coeffs)[0]
    for i_mask in nz_a:
        ai = a.coeffs[i_mask]
        i_mask = int(i_mask)
        for j_mask in nz_b:
            j_mask = int(j_mask)
            if i_mask & j_mask:
                continue
            out[i_mask | j_mask] += shuffle_sign(i_mask, j_mask) * ai * b.coeffs[j_mask]
    return Multivector(a.ambient_dim, a.field, out)


def inner(a: Multivector, b: Multivector):
    """Inner product, conjugate-linear in the left slot; distinct grades
    are orthogonal because coordinate blades are an orthonormal basis."""
    _check_match(a, b)
    value = np.vdot(a.coeffs, b.coeffs)
    return complex(value) if a.field is Field.COMPLEX else float(value.real if np.iscomplexobj(value) else value)


def contract(nu: Multivector, omega: Multivector) -> Multivector:
    """Left contraction: the adjoint of left exterior multiplication.

    <mu, contract(nu, omega)> = <nu ^ mu, omega> for every mu.  Vanishes
    when grade(nu) > grade(omega) and reduces to the inner product on
    equal grades (landing in the scalar slot).
    """
    _check_match(nu, omega)
    out = np.zeros_like(omega.coeffs)
    nz_nu = np.nonzero(nu.coeffs)[0]
    nz_om = np.nonzero(omega.coeffs)[0]
    for i_mask in nz_nu:
        i_mask = int(i_mask)
        ci = np.conj(nu.coeffs[i_mask])
        for j_mask in nz_om:
            j_mask = int(j_mask)
            if (i_mask & j_mask) != i_mask:
                continue
            rest = j_mask & ~i_mask
            out[rest] += shuffle_sign(i_mask, rest) * ci * omega.coeffs[j_mask]
    return Multivector(nu.ambient_dim, nu.field, out)


@dataclass(frozen=True)
class Blade:
    """A multivector known (by construction) to be simple, plus its grade."""

    multivector: Multivector
    grade: int

    @property
    def norm(self) -> float:
        return self.multivector.norm


def blade_of(V: Subspace) -> Blade:
    """Unit blade representing a subspace: the wedge of its orthonormal
    basis columns.  The zero subspace is represented by the scalar 1."""
    _check_cap(V.ambient_dim, V.field)
    acc = scalar_multivector(V.ambient_dim, V.field)
    for j in range(V.dim):
        acc = wedge_vector(acc, V.basis[:, j])
    nrm = acc.norm
    if V.dim and abs(nrm - 1.0) > 1e-12:
        acc = acc.scale(1.0 / nrm)
    return Blade(multivector=acc, grade=V.dim)


def project_multivector(W: Subspace, x: Multivector) -> Multivector:
    """Grade-wise orthogonal projection onto the exterior algebra of W.

    On blades this is the wedge of the projected factors; on everything
    else it is the linear extension, i.e. the orthogonal projection onto
    the span of W's coordinate blades.
    """
    if W.ambient_dim != x.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {W.ambient_dim} vs {x.ambient_dim}")
    if W.field is not x.field:
        raise ValueError(f"field mismatch: {W.field.value} vs {x.field.value}")
    out = np.zeros_like(x.coeffs)
    cols = [W.basis[:, j] for j in range(W.dim)]
    n = x.ambient_dim

    def visit(blade_coeffs: np.ndarray, start: int) -> None:
        out_idx = np.vdot(blade_coeffs, x.coeffs)
        if out_idx != 0:
            np.add(out, blade_coeffs * out_idx, out=out)
        for j in range(start, len(cols)):
            visit(_wedge_vector_coeffs(blade_coeffs, cols[j], n), j + 1)

    root = np.zeros(1 << n, dtype=x.field.dtype)
    root[0] = 1.0
    visit(root, 0)
    return Multivector(x.ambient_dim, x.field, out)


def oracle_grassmann_angle(V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> float:
    """Angle from the norm of the projected blade: the projection of a
    unit blade of V onto the algebra of W has norm cos(angle)."""
    nu = blade_of(V).multivector
    projected = project_multivector(W, nu)
    return arccos_clamped(projected.norm, cfg)


def oracle_complementary_angle(V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> float:
    """Angle from the norm of the wedge of unit blades."""
    nu = blade_of(V).multivector
    om = blade_of(W).multivector
    return arccos_clamped(wedge(nu, om).norm, cfg)


def oracle_contraction_angle(V: Subspace, W: Subspace, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> float:
    """Angle from the norm of the contraction of unit blades; agrees with
    the projected-blade route for all inputs."""
    nu = blade_of(V).multivector
    om = blade_of(W).multivector
    return arccos_clamped(contract(nu, om).norm, cfg)


# ---------------------------------------------------------------------------
# Multi-index helpers (coordinate decompositions of a decomposed blade)
# ---------------------------------------------------------------------------


def multi_index_norm(indices: Sequence[int]) -> int:
    """Sum of a strictly increasing 1-based index tuple."""
    return int(sum(indices))


def multi_index_complement(indices: Sequence[int], q: int) -> tuple[int, ...]:
    chosen = set(indices)
    return tuple(i for i in range(1, q + 1) if i not in chosen)


def epsilon_sign(indices: Sequence[int]) -> int:
    """Reordering sign of the coordinate decomposition: for a grade-p
    index tuple, (-1) ** (sum(indices) + p (p + 1) / 2)."""
    p = len(indices)
    return -1 if (multi_index_norm(indices) + p * (p + 1) // 2) % 2 else 1


def coordinate_blade(
    factors: Sequence[np.ndarray],
    indices: Sequence[int],
    field: Field,
    ambient_dim: int | None = None,
) -> Multivector:
    """w_{i1} ^ ... ^ w_{ip} for 1-based indices into the factor list."""
    factors = [as_field_array(f, field) for f in factors]
    if factors:
        n = factors[0].shape[0]
    elif ambient_dim is not None:
        n = ambient_dim
    else:
        raise ValueError("ambient_dim is required when the factor list is empty")
    acc = scalar_multivector(n, field)
    for i in indices:
        acc = wedge_vector(acc, factors[i - 1])
    return acc


def contract_via_coordinate_expansion(
    nu: Multivector, factors: Sequence[np.ndarray]
) -> Multivector:
    """Contraction of a homogeneous element against a decomposed blade,
    via the explicit coordinate-decomposition expansion.  Independent of
    the bitmask production path; used to cross-check it."""
    import itertools

    grades = nu.grades()
    if len(grades) > 1:
        raise ValueError("expansion requires a homogeneous left argument")
    p = grades[0] if grades else 0
    q = len(factors)
    field = nu.field
    n = nu.ambient_dim
    out = zero_multivector(n, field)
    if p > q:
        return out
    for combo in itertools.combinations(range(1, q + 1), p):
        omega_i = coordinate_blade(factors, combo, field)
        coeff = inner(nu, omega_i) * epsilon_sign(combo)
        if coeff == 0:
            continue
        omega_ic = coordinate_blade(factors, multi_index_complement(combo, q), field)
        out = out.add(omega_ic.scale(coeff))
    return out


def contract_via_adjoint(nu: Multivector, omega: Multivector) -> Multivector:
    """Contraction computed straight from the adjoint identity by testing
    against every coordinate blade.  Slow; test oracle only."""
    _check_match(nu, omega)
    n = nu.ambient_dim
    out = np.zeros_like(omega.coeffs)
    for mask in range(1 << n):
        mu = basis_blade(n, nu.field, mask)
        out[mask] = inner(wedge(nu, mu), omega)
    return Multivector(n, nu.field, out)
