"""Certified polynomial approximation in A^2 of a disk.

The approximant is a Taylor truncation of a small dilation f_rho(z) = f(rho z)
with rho < 1; the certificate splits as ||f - f_rho|| + ||f_rho - h|| and both
pieces are evaluated as explicit coefficient sums plus a geometric majorant
remainder.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .disk import DiskFunction, monomial_moment
from .errors import TailBoundUnavailable


@dataclass(frozen=True)
class PowerSeries:
    """Power series sum c_n z^n with an optional geometric majorant.

    head holds explicit leading coefficients; tail_rule, when present, gives
    c_n for n >= len(head).  A majorant asserts |c_n| <= bound_m / bound_s^n
    for all n and is required for certified tail estimates; series without a
    tail_rule are polynomials and certify trivially.
    """

    head: tuple[complex, ...] = ()
    tail_rule: Callable[[int], complex] | None = None
    bound_m: float | None = None
    bound_s: float | None = None

    def coeff(self, n: int) -> complex:
        if n < len(self.head):
            return complex(self.head[n])
        if self.tail_rule is not None:
            return complex(self.tail_rule(n))
        return 0.0 + 0.0j

    @property
    def is_polynomial(self) -> bool:
        return self.tail_rule is None

    @classmethod
    def polynomial(cls, coeffs) -> "PowerSeries":
        return cls(head=tuple(complex(c) for c in coeffs))

    @classmethod
    def geometric_pole(cls, pole: complex) -> "PowerSeries":
        """Series of 1/(pole - z); majorant is exact: |c_n| = (1/|pole|) |pole|^-n."""
        p = complex(pole)
        mag = abs(p)
        if mag <= 0.0:
            raise ValueError("pole must be nonzero")
        return cls(
            tail_rule=lambda n: 1.0 / p ** (n + 1),
            bound_m=1.0 / mag,
            bound_s=mag,
        )


@dataclass(frozen=True)
class PolynomialApproximation:
    coeffs: tuple[complex, ...]
    rho: float
    degree: int
    certified_bound: float
    dilation_error: float     # certified ||f - f_rho||_{L2(D_r)}
    truncation_error: float   # certified ||f_rho - h||_{L2(D_r)}
    radius: float

    def as_disk_function(self) -> DiskFunction:
        return DiskFunction.from_terms(
            [(c, n, 0) for n, c in enumerate(self.coeffs)], self.radius
        )


def _geometric_remainder(m: float, ratio_sq: float, start: int) -> float:
    """Bound sum_{n >= start} m^2 ratio_sq^n (coefficient-tail envelope)."""
    if ratio_sq >= 1.0:
        return math.inf
    return m * m * ratio_sq**start / (1.0 - ratio_sq)


def approximate_by_polynomial(
    series: PowerSeries,
    epsilon: float,
    radius: float = 1.0,
) -> PolynomialApproximation:
    """Produce h with certified ||f - h||_{L2(D_radius)} < epsilon.

    Polynomials return themselves with bound zero.  Otherwise the series must
    carry a majorant valid on a disk strictly containing D_radius
    (bound_s > radius), else TailBoundUnavailable.
    """
    if epsilon <= 0.0:
        raise ValueError("epsilon must be positive")
    if series.is_polynomial:
        return PolynomialApproximation(
            coeffs=series.head,
            rho=1.0,
            degree=max(len(series.head) - 1, 0),
            certified_bound=0.0,
            dilation_error=0.0,
            truncation_error=0.0,
            radius=radius,
        )
    if series.bound_m is None or series.bound_s is None:
        raise TailBoundUnavailable("series carries no coefficient majorant")
    if series.bound_s <= radius:
        raise TailBoundUnavailable(
            f"majorant scale {series.bound_s} does not exceed the disk radius {radius}"
        )
    m, s = float(series.bound_m), float(series.bound_s)
    q = (radius / s) ** 2

    # Working window: beyond n_cut the majorant remainder is negligible vs epsilon.
    budget = (epsilon * 1e-4) ** 2
    n_cut = 64
    while math.pi * radius * radius * _geometric_remainder(m, q, n_cut + 1) > budget:
        n_cut *= 2
        if n_cut > 1 << 22:
            raise TailBoundUnavailable("majorant decays too slowly to certify")
    coeffs = [series.coeff(n) for n in range(n_cut + 1)]
    mom = [monomial_moment(radius, n) for n in range(n_cut + 1)]
    window_rem = math.pi * radius * radius * _geometric_remainder(m, q, n_cut + 1)

    # Dilation step: raise rho toward 1 until ||f - f_rho|| <= epsilon/2.
    dilation_err = math.inf
    rho = 0.5
    for k in range(1, 60):
        rho = 1.0 - 0.5**k
        e1_sq = (
            sum(
                abs(c) ** 2 * (1.0 - rho**n) ** 2 * mom[n]
                for n, c in enumerate(coeffs)
            )
            + window_rem
        )
        dilation_err = math.sqrt(e1_sq)
        if dilation_err <= 0.5 * epsilon:
            break
    if dilation_err > 0.5 * epsilon:
        raise TailBoundUnavailable("dilation step cannot reach the requested accuracy")

    # Truncation step: smallest degree whose dilated tail fits the remaining budget.
    remaining = epsilon - dilation_err
    tail_sq = sum(
        abs(c) ** 2 * rho ** (2 * n) * mom[n] for n, c in enumerate(coeffs)
    ) + math.pi * radius * radius * _geometric_remainder(m, q * rho * rho, n_cut + 1)
    degree = n_cut
    running = tail_sq
    truncation_err = 0.0
    for n in range(n_cut + 1):
        tail_here = math.sqrt(max(running, 0.0))
        if tail_here <= remaining:
            degree = n - 1
            truncation_err = tail_here
            break
        running -= abs(coeffs[n]) ** 2 * rho ** (2 * n) * mom[n]
    else:
        truncation_err = math.sqrt(max(running, 0.0))
    degree = max(degree, 0)
    if dilation_err + truncation_err > epsilon:
        raise TailBoundUnavailable(
            f"certified bound {dilation_err + truncation_err:.3e} exceeds epsilon"
        )
    h = tuple(coeffs[n] * rho**n for n in range(degree + 1))
    return PolynomialApproximation(
        coeffs=h,
        rho=rho,
        degree=degree,
        certified_bound=dilation_err + truncation_err,
        dilation_error=dilation_err,
        truncation_error=truncation_err,
        radius=radius,
    )
