"""Exact Bergman-space computations on disks D_r = {|z| < r}.

Everything reduces to the monomial moments int_{D_r} |z|^{2k} dV =
pi r^{2k+2} / (k+1); quadrature never enters the main path.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotHarmonic, NotHolomorphic, PoleProximity

Term = tuple[complex, int, int]  # coeff * z^a * zbar^b


def _normalize(terms) -> tuple[Term, ...]:
    acc: dict[tuple[int, int], complex] = {}
    for coeff, a, b in terms:
        if a < 0 or b < 0:
            raise ValueError(f"negative exponent in term ({coeff}, {a}, {b})")
        key = (int(a), int(b))
        acc[key] = acc.get(key, 0.0 + 0.0j) + complex(coeff)
    kept = [(c, a, b) for (a, b), c in acc.items() if c != 0]
    kept.sort(key=lambda t: (t[1] + t[2], t[1]))
    return tuple(kept)


@dataclass(frozen=True)
class DiskFunction:
    """Finite sum of bi-monomials sum c * z^a * zbar^b on a disk of given radius."""

    terms: tuple[Term, ...]
    radius: float = 1.0

    @classmethod
    def from_terms(cls, terms, radius: float = 1.0) -> "DiskFunction":
        return cls(_normalize(terms), float(radius))

    @classmethod
    def monomial(cls, coeff: complex, a: int, b: int, radius: float = 1.0) -> "DiskFunction":
        return cls.from_terms([(coeff, a, b)], radius)

    def conj(self) -> "DiskFunction":
        return DiskFunction.from_terms(
            [(c.conjugate(), b, a) for c, a, b in self.terms], self.radius
        )

    def __add__(self, other: "DiskFunction") -> "DiskFunction":
        return DiskFunction.from_terms(self.terms + other.terms, self.radius)

    def __mul__(self, other):
        if isinstance(other, DiskFunction):
            prod = [
                (c1 * c2, a1 + a2, b1 + b2)
                for c1, a1, b1 in self.terms
                for c2, a2, b2 in other.terms
            ]
            return DiskFunction.from_terms(prod, self.radius)
        return DiskFunction.from_terms(
            [(c * other, a, b) for c, a, b in self.terms], self.radius
        )

    __rmul__ = __mul__

    def __sub__(self, other: "DiskFunction") -> "DiskFunction":
        return self + (-1.0) * other

    @property
    def is_holomorphic(self) -> bool:
        return all(b == 0 for _, _, b in self.terms)

    @property
    def is_harmonic(self) -> bool:
        return all(a == 0 or b == 0 for _, a, b in self.terms)

    def __call__(self, z: complex) -> complex:
        zb = np.conjugate(z)
        return sum(c * z**a * zb**b for c, a, b in self.terms)


def monomial_moment(r: float, k: int) -> float:
    """int_{D_r} |z|^{2k} dV = pi r^{2k+2} / (k+1)."""
    return math.pi * r ** (2 * k + 2) / (k + 1)


def annulus_moment(r_outer: float, r_inner: float, k: int) -> float:
    return math.pi * (r_outer ** (2 * k + 2) - r_inner ** (2 * k + 2)) / (k + 1)


def disk_inner(f: DiskFunction, g: DiskFunction, r: float | None = None) -> complex:
    """<f, g>_{L^2(D_r)} from the angular selection rule a1 - b1 = a2 - b2."""
    r = f.radius if r is None else r
    total = 0.0 + 0.0j
    for c1, a1, b1 in f.terms:
        for c2, a2, b2 in g.terms:
            if a1 - b1 == a2 - b2:
                total += c1 * c2.conjugate() * monomial_moment(r, a1 + b2)
    return total


def disk_norm_sq(f: DiskFunction, r: float | None = None) -> float:
    return disk_inner(f, f, r).real


def basis_norm(r: float, n: int) -> float:
    """Norm of z^n in A^2(D_r)."""
    return math.sqrt(monomial_moment(r, n))


def disk_kernel(r: float, z: complex, xi: complex) -> complex:
    """Bergman kernel of D_r: r^2 / (pi (r^2 - z conj(xi))^2)."""
    denom = r * r - z * np.conjugate(xi)
    if abs(denom) < 1e-14:
        raise PoleProximity(f"kernel denominator {abs(denom):.3e} below guard")
    return r * r / (math.pi * denom * denom)


def disk_project(r: float, f: DiskFunction) -> DiskFunction:
    """Bergman projection on D_r.

    Term z^a zbar^b projects to ((a-b+1)/(a+1)) r^{2b} z^{a-b} when a >= b
    and to zero otherwise; the result is holomorphic.
    """
    out = []
    for c, a, b in f.terms:
        if a >= b:
            out.append((c * ((a - b + 1) / (a + 1)) * r ** (2 * b), a - b, 0))
    return DiskFunction.from_terms(out, r)


def projection_with_cutoff(r: float, f: DiskFunction, cutoff: float) -> DiskFunction:
    """Projection onto A^2(D_r) of f times the indicator of D_cutoff.

    Coefficient of z^n is <1_{D_c} f, z^n> / ||z^n||^2 with the pairing taken
    over D_min(cutoff, r).
    """
    m = min(cutoff, r)
    coeffs: dict[int, complex] = {}
    for c, a, b in f.terms:
        n = a - b
        if n >= 0:
            coeffs[n] = coeffs.get(n, 0.0 + 0.0j) + c * monomial_moment(m, a)
    out = [(v / monomial_moment(r, n), n, 0) for n, v in coeffs.items()]
    return DiskFunction.from_terms(out, r)


def disk_hankel_gram(
    r: float,
    phi: DiskFunction,
    f1: DiskFunction,
    psi: DiskFunction,
    f2: DiskFunction,
) -> complex:
    """<H_phi f1, H_psi f2>_{D_r} = <phi f1, psi f2> - <P(phi f1), P(psi f2)>."""
    if not f1.is_holomorphic:
        raise NotHolomorphic("f1 has antiholomorphic terms")
    if not f2.is_holomorphic:
        raise NotHolomorphic("f2 has antiholomorphic terms")
    u = phi * f1
    v = psi * f2
    return disk_inner(u, v, r) - disk_inner(disk_project(r, u), disk_project(r, v), r)


def hankel_product_matrix(r: float, phi: DiskFunction, psi: DiskFunction, n: int) -> np.ndarray:
    """Matrix of (H_psi)* H_phi on span{z^0, ..., z^{n-1}} orthonormalized."""
    mat = np.zeros((n, n), dtype=complex)
    basis = [
        DiskFunction.monomial(1.0 / basis_norm(r, k), k, 0, r) for k in range(n)
    ]
    for col in range(n):
        for row in range(n):
            mat[row, col] = disk_hankel_gram(r, phi, basis[col], psi, basis[row])
    return mat


def zheng_product_norm(r: float, phi: DiskFunction, psi: DiskFunction, n: int) -> float:
    """Operator norm of the n x n section of (H_psi)* H_phi for harmonic symbols."""
    if not phi.is_harmonic:
        raise NotHarmonic("phi has a mixed term z^a zbar^b with a, b > 0")
    if not psi.is_harmonic:
        raise NotHarmonic("psi has a mixed term z^a zbar^b with a, b > 0")
    if n < 1:
        raise ValueError("section size must be >= 1")
    mat = hankel_product_matrix(r, phi, psi, n)
    return float(np.linalg.norm(mat, 2))
