"""Convergence experiments for disk projections and Hankel Gram forms.

Both experiments track a one-parameter family of disks D_r and compare
against the target disk; all norms are exact monomial-moment evaluations.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .disk import (
    DiskFunction,
    annulus_moment,
    disk_hankel_gram,
    monomial_moment,
    projection_with_cutoff,
)

CONVERGED_FINAL_ERROR = 1e-3   # convergence verdict: final L2(C) error below this
GRAM_CONVERGED_GAP = 1e-2      # convergence verdict: final |G(r) - G(r0)| below this


def _poly_norm_sq_disk(f: DiskFunction, r: float) -> float:
    return sum(
        (c1 * c2.conjugate()).real * monomial_moment(r, a1)
        for c1, a1, _ in f.terms
        for c2, a2, _ in f.terms
        if a1 == a2
    )


def _poly_norm_sq_annulus(f: DiskFunction, r_outer: float, r_inner: float) -> float:
    return sum(
        (c1 * c2.conjugate()).real * annulus_moment(r_outer, r_inner, a1)
        for c1, a1, _ in f.terms
        for c2, a2, _ in f.terms
        if a1 == a2
    )


@dataclass(frozen=True)
class ProjectionConvergenceResult:
    radii: tuple[float, ...]
    errors_sq: tuple[float, ...]      # ||E_{D_r} P^{D_r} psi - E_D P^D psi||^2_{L2(C)}
    errors: tuple[float, ...]
    sup_on_compact: tuple[float, ...] # sup over the compact |z| <= compact_radius
    compact_radius: float
    converged: bool


def projection_convergence_experiment(
    f: DiskFunction,
    cutoff: float,
    radii: list[float],
    compact_radius: float = 0.5,
    n_samples: int = 720,
) -> ProjectionConvergenceResult:
    """Track E_{D_r} P^{D_r} (1_{D_cutoff} f) against the unit-disk target.

    The L2(C) error splits over D_min(r,1), the annulus between radii, and
    the exterior where both extensions vanish; every piece is an exact
    polynomial moment.  The uniform error is sampled on |z| = compact_radius,
    where the maximum of the holomorphic difference is attained.
    """
    target = projection_with_cutoff(1.0, f, cutoff)
    angles = np.exp(2j * np.pi * np.arange(n_samples) / n_samples)
    boundary = compact_radius * angles
    errors_sq = []
    sups = []
    for r in radii:
        h_r = projection_with_cutoff(r, f, cutoff)
        diff = h_r - target
        if r >= 1.0:
            e2 = _poly_norm_sq_disk(diff, 1.0) + _poly_norm_sq_annulus(h_r, r, 1.0)
        else:
            e2 = _poly_norm_sq_disk(diff, r) + _poly_norm_sq_annulus(target, 1.0, r)
        errors_sq.append(e2)
        sups.append(max(abs(diff(z)) for z in boundary))
    errors = [float(np.sqrt(max(e, 0.0))) for e in errors_sq]
    ratios_ok = all(b < a for a, b in zip(errors, errors[1:]) if a > 0)
    converged = bool(errors[-1] < CONVERGED_FINAL_ERROR and ratios_ok)
    return ProjectionConvergenceResult(
        radii=tuple(float(r) for r in radii),
        errors_sq=tuple(errors_sq),
        errors=tuple(errors),
        sup_on_compact=tuple(float(s) for s in sups),
        compact_radius=compact_radius,
        converged=converged,
    )


@dataclass(frozen=True)
class GramConvergenceResult:
    radii: tuple[float, ...]
    values: tuple[complex, ...]
    target_radius: float
    target_value: complex
    gaps: tuple[float, ...]
    converged: bool


def gram_convergence_experiment(
    phi: DiskFunction,
    f1: DiskFunction,
    psi: DiskFunction,
    f2: DiskFunction,
    radii: list[float],
    r0: float = 1.0,
) -> GramConvergenceResult:
    """Track G(r) = <H_phi f1, H_psi f2>_{D_r} along radii approaching r0.

    Converged means the gaps |G(r) - G(r0)| shrink monotonically within each
    side of r0 and the final gap on every side is below GRAM_CONVERGED_GAP.
    """
    target = disk_hankel_gram(r0, phi, f1, psi, f2)
    values = [disk_hankel_gram(r, phi, f1, psi, f2) for r in radii]
    gaps = [abs(v - target) for v in values]
    sides_ok = True
    for side in (
        [(abs(r - r0), g) for r, g in zip(radii, gaps) if r < r0],
        [(abs(r - r0), g) for r, g in zip(radii, gaps) if r > r0],
    ):
        if not side:
            continue
        side.sort(key=lambda t: -t[0])  # order by approach toward r0
        ordered = [g for _, g in side]
        if any(b > a + 1e-15 for a, b in zip(ordered, ordered[1:])):
            sides_ok = False
        if ordered[-1] > GRAM_CONVERGED_GAP:
            sides_ok = False
    return GramConvergenceResult(
        radii=tuple(float(r) for r in radii),
        values=tuple(values),
        target_radius=r0,
        target_value=target,
        gaps=tuple(gaps),
        converged=bool(sides_ok),
    )
