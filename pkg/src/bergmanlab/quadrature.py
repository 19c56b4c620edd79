"""Quadrature kernels: midpoint refinement with Richardson extrapolation,
plus polar rules for disks used as independent oracles."""
from __future__ import annotations

from typing import Callable

import numpy as np

from .errors import QuadratureNonConvergence

MAX_LEVEL = 18


def midpoint_romberg(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-13,
    max_level: int = MAX_LEVEL,
    min_level: int = 3,
) -> tuple[float, float]:
    """Integrate smooth f over [a, b]: midpoint refinement + Richardson table.

    M_k is the composite midpoint rule with 2^k panels; the midpoint rule has
    an even-power error expansion, so the Richardson columns
    R[k][j] = (4^j R[k][j-1] - R[k-1][j-1]) / (4^j - 1) gain two orders each.
    Converged when the last two diagonal entries agree within tol; the
    recorded error is that final correction.  Raises QuadratureNonConvergence
    if max_level is exhausted.
    """
    if b <= a:
        return 0.0, 0.0
    rows: list[list[float]] = []
    prev_diag = None
    for k in range(max_level + 1):
        n = 1 << k
        h = (b - a) / n
        total = 0.0
        for i in range(n):
            total += f(a + (i + 0.5) * h)
        row = [total * h]
        for j in range(1, k + 1):
            factor = 4.0**j
            row.append((factor * row[j - 1] - rows[k - 1][j - 1]) / (factor - 1.0))
        rows.append(row)
        diag = row[-1]
        if prev_diag is not None and k >= min_level:
            delta = abs(diag - prev_diag)
            if delta <= tol:
                return diag, delta
        prev_diag = diag
    raise QuadratureNonConvergence(
        f"midpoint refinement did not stabilize within {max_level} levels "
        f"on [{a}, {b}]"
    )


def piecewise_midpoint_romberg(
    f: Callable[[float], float],
    cuts: list[float],
    tol: float = 1e-13,
    max_level: int = MAX_LEVEL,
) -> tuple[float, float]:
    """Integrate over [cuts[0], cuts[-1]] splitting at the interior cuts.

    The cuts must isolate every non-smooth point of f, so each piece has the
    even-power error expansion the extrapolation relies on.
    """
    total = 0.0
    err = 0.0
    span = cuts[-1] - cuts[0]
    for lo, hi in zip(cuts, cuts[1:]):
        piece_tol = tol * max((hi - lo) / span, 1e-3)
        val, piece_err = midpoint_romberg(f, lo, hi, tol=piece_tol, max_level=max_level)
        total += val
        err += piece_err
    return total, err


def disk_quadrature(
    fn: Callable[[np.ndarray], np.ndarray],
    radius: float,
    inner_radius: float = 0.0,
    n_radial: int = 96,
    n_angular: int = 256,
) -> complex:
    """Integrate fn(z) dV over the annulus inner_radius < |z| < radius.

    Gauss-Legendre in the radial direction, trapezoid in the angle (exact for
    trigonometric polynomials).  fn must accept a complex ndarray.
    """
    nodes, weights = np.polynomial.legendre.leggauss(n_radial)
    r = 0.5 * (radius - inner_radius) * (nodes + 1.0) + inner_radius
    wr = 0.5 * (radius - inner_radius) * weights * r
    theta = 2.0 * np.pi * np.arange(n_angular) / n_angular
    wt = 2.0 * np.pi / n_angular
    z = r[:, None] * np.exp(1j * theta)[None, :]
    vals = fn(z)
    return complex(np.sum(vals * wr[:, None]) * wt)


def richardson_trapezoid(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    n_start: int = 64,
    rounds: int = 12,
    tol: float = 1e-12,
) -> tuple[float, float]:
    """Trapezoid rule with panel doubling and one Richardson extrapolation step.

    Low-order cross-check for the main midpoint path; f must be vectorized
    over a float ndarray.
    """
    n = n_start
    prev_t = None
    prev_extrap = None
    for _ in range(rounds):
        x = np.linspace(a, b, n + 1)
        y = f(x)
        t = float(np.trapezoid(y, x))
        if prev_t is not None:
            extrap = (4.0 * t - prev_t) / 3.0
            if prev_extrap is not None and abs(extrap - prev_extrap) <= tol * max(1.0, abs(extrap)):
                return extrap, abs(extrap - prev_extrap)
            prev_extrap = extrap
        prev_t = t
        n *= 2
    return prev_extrap if prev_extrap is not None else prev_t, float("inf")
