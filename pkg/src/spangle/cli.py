"""Command-line front end.

Commands: ``angle``, ``principal``, ``random``, ``verify``, ``geodesic``.
Subspaces travel as the JSON documents described in :mod:`spangle.io`.
Output is JSON on every exit path; angles are serialized in radians with
15 significant digits unless ``--degrees`` is given (presentation only).
Exit codes: 0 success, 1 failed verification, 2 parse/validation error.
"""

from __future__ import annotations

import math
import sys

import click
import numpy as np

from .angles import (
    angle_report,
    grassmann_angle,
    oriented_angle,
    oriented_from_spanning,
)
from .io import (
    SubspaceDocumentError,
    dump_json,
    load_subspace_file,
    subspace_document,
    write_subspace_file,
)
from .linalg import Field
from .metrics import fubini_study, geodesic_point
from .principal import principal_angles
from .sampling import haar_subspace
from .verify import SUITE_NAMES, run_suites


def _fail(field_name: str, message: str) -> None:
    click.echo(dump_json({"error": message, "field": field_name}), nl=False)
    sys.exit(2)


def _sig(x: float) -> float:
    return float(f"{x:.15g}")


def _angle_out(x: float, degrees: bool) -> float:
    return _sig(math.degrees(x) if degrees else x)


def _load(path: str, side: str):
    try:
        return load_subspace_file(path)
    except SubspaceDocumentError as exc:
        _fail(f"{side}:{exc.field_name}", str(exc))
    except OSError as exc:
        _fail(side, f"cannot read {path}: {exc}")


def _check_compatible(left, right) -> None:
    if left.field is not right.field:
        _fail("field", f"field mismatch: {left.field.value} vs {right.field.value}")
    if left.ambient_dim != right.ambient_dim:
        _fail(
            "ambient_dim",
            f"ambient dimension mismatch: {left.ambient_dim} vs {right.ambient_dim}",
        )


@click.group()
def main() -> None:
    """Angles, metrics and verification suites for real/complex subspaces."""


@main.command("angle")
@click.argument("left", type=click.Path())
@click.argument("right", type=click.Path())
@click.option("--degrees", is_flag=True, help="format angles in degrees")
@click.option("--oriented", "oriented_flag", is_flag=True, help="include the oriented angle (equal dimensions)")
def cmd_angle(left: str, right: str, degrees: bool, oriented_flag: bool) -> None:
    """Full angle report for a pair of subspace files."""
    V, v_vectors = _load(left, "left")
    W, w_vectors = _load(right, "right")
    _check_compatible(V, W)
    report = angle_report(V, W)
    angles = principal_angles(V, W)
    out = {
        "ambient_dim": V.ambient_dim,
        "field": V.field.value,
        "units": "degrees" if degrees else "radians",
        "dim_left": V.dim,
        "dim_right": W.dim,
        "principal_angles": [_angle_out(a, degrees) for a in angles],
        "theta_left_right": _angle_out(report.theta, degrees),
        "theta_right_left": _angle_out(grassmann_angle(W, V), degrees),
        "theta_perp": _angle_out(report.theta_perp, degrees),
        "theta_min_sym": _angle_out(report.theta_min_sym, degrees),
        "theta_max_sym": _angle_out(report.theta_max_sym, degrees),
        "projection_factor": _sig(report.projection_factor),
        "fubini_study": _angle_out(fubini_study(V, W), degrees),
    }
    if oriented_flag:
        if V.dim != W.dim:
            _fail("vectors", "oriented angles require equal dimensions")
        try:
            ov = oriented_from_spanning(v_vectors, V.field, ambient_dim=V.ambient_dim)
            ow = oriented_from_spanning(w_vectors, W.field, ambient_dim=W.ambient_dim)
        except ValueError as exc:
            _fail("vectors", f"orientation needs independent vectors: {exc}")
        oa = oriented_angle(ov, ow)
        cz = complex(oa.cos_value)
        out["oriented"] = {
            "magnitude": _angle_out(oa.magnitude, degrees),
            "phase": None if oa.phase is None else _angle_out(oa.phase, degrees),
            "cos_value": [_sig(cz.real), _sig(cz.imag)],
        }
    click.echo(dump_json(out), nl=False)


@main.command("principal")
@click.argument("left", type=click.Path())
@click.argument("right", type=click.Path())
@click.option("--degrees", is_flag=True, help="format angles in degrees")
def cmd_principal(left: str, right: str, degrees: bool) -> None:
    """Principal angles of a pair of subspace files."""
    V, _ = _load(left, "left")
    W, _ = _load(right, "right")
    _check_compatible(V, W)
    angles = principal_angles(V, W)
    out = {
        "ambient_dim": V.ambient_dim,
        "field": V.field.value,
        "units": "degrees" if degrees else "radians",
        "dim_left": V.dim,
        "dim_right": W.dim,
        "principal_angles": [_angle_out(a, degrees) for a in angles],
    }
    click.echo(dump_json(out), nl=False)


@main.command("random")
@click.argument("ambient_dim", type=int)
@click.argument("dim", type=int)
@click.option("--field", "field_name", type=click.Choice(["real", "complex"]), default="real")
@click.option("--seed", type=int, default=0, help="RNG seed (reproducible output)")
@click.option("--out", "out_path", type=click.Path(), default=None, help="write to a file instead of stdout")
def cmd_random(ambient_dim: int, dim: int, field_name: str, seed: int, out_path: str | None) -> None:
    """Write a Haar-uniform random subspace document."""
    if not 0 <= dim <= ambient_dim:
        _fail("dim", f"need 0 <= dim <= ambient_dim, got dim={dim}, ambient_dim={ambient_dim}")
    field = Field.COMPLEX if field_name == "complex" else Field.REAL
    rng = np.random.default_rng(seed)
    V = haar_subspace(rng, ambient_dim, dim, field)
    if out_path is None:
        click.echo(dump_json(subspace_document(V)), nl=False)
    else:
        write_subspace_file(out_path, V)
        click.echo(dump_json({"out": out_path, "ambient_dim": ambient_dim, "dim": dim}), nl=False)


@main.command("verify")
@click.option("--suite", default="all", help=f"one of: {', '.join(SUITE_NAMES)}, all")
@click.option("--dim-max", type=int, default=6)
@click.option("--trials", type=int, default=200)
@click.option("--seed", type=int, default=42)
def cmd_verify(suite: str, dim_max: int, trials: int, seed: int) -> None:
    """Run the randomized verification suites; exit 0 iff all pass."""
    if suite != "all" and suite not in SUITE_NAMES:
        _fail("suite", f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)} or 'all'")
    if trials < 0:
        _fail("trials", "trials must be nonnegative")
    if dim_max < 2:
        _fail("dim-max", "dim-max must be at least 2")
    reports = run_suites(suite, seed=seed, trials=trials, dim_max=dim_max)
    passed = all(r.passed for r in reports)
    out = {
        "suite": suite,
        "seed": seed,
        "trials": trials,
        "dim_max": dim_max,
        "passed": passed,
        "suites": [r.as_dict() for r in reports],
    }
    if trials == 0:
        out["note"] = "0 trials: all checks vacuously pass"
    click.echo(dump_json(out), nl=False)
    sys.exit(0 if passed else 1)


@main.command("geodesic")
@click.argument("left", type=click.Path())
@click.argument("right", type=click.Path())
@click.option("--t", "t_param", type=float, required=True, help="arc-length parameter in radians")
@click.option("--phase", type=float, default=None, help="geodesic phase (complex field)")
@click.option("--out", "out_path", type=click.Path(), default=None)
def cmd_geodesic(left: str, right: str, t_param: float, phase: float | None, out_path: str | None) -> None:
    """Point on the geodesic between two codimension-1-intersecting subspaces."""
    U, _ = _load(left, "left")
    W, _ = _load(right, "right")
    _check_compatible(U, W)
    try:
        V = geodesic_point(U, W, t_param, phase=phase)
    except ValueError as exc:
        _fail("vectors", str(exc))
    if out_path is None:
        click.echo(dump_json(subspace_document(V)), nl=False)
    else:
        write_subspace_file(out_path, V)
        click.echo(dump_json({"out": out_path}), nl=False)


if __name__ == "__main__":
    main()
