"""Acceptance gate: every criterion runs at its stated tolerance and prints
one pass/fail line.  Closed-form targets are pinned here; independent oracles
for them live in the per-module test files."""
import math
import time

import numpy as np

from bergmanlab.approx import PowerSeries, approximate_by_polynomial
from bergmanlab.compactness import (
    BOUNDED,
    DECAYS,
    dichotomy_experiment,
    monomial_ray_functional,
    slice_decomposition_residual,
)
from bergmanlab.disk import DiskFunction, hankel_product_matrix, zheng_product_norm
from bergmanlab.diskexp import projection_convergence_experiment
from bergmanlab.moments import MomentTable
from bergmanlab.quadrature import disk_quadrature
from bergmanlab.sections import hankel_product_section, semicommutator_identity_residual
from bergmanlab.shadow import (
    INTERSECTION_PRESET_RADIUS,
    build_shadow,
    detect_boundary_disks,
)
from bergmanlab.symbols import MonomialSymbol

PI = math.pi
ONE = MonomialSymbol.monomial(1.0)
Z = MonomialSymbol.monomial(1.0, a=1)
ZBAR = MonomialSymbol.monomial(1.0, b=1)
WBAR = MonomialSymbol.monomial(1.0, d=1)
D_ONE = DiskFunction.monomial(1.0, 0, 0)
D_Z = DiskFunction.monomial(1.0, 1, 0)
D_ZBAR = DiskFunction.monomial(1.0, 0, 1)

INTERSECTION = {
    "kind": "intersection", "r_z": 1.0, "r_w": 1.0, "R": INTERSECTION_PRESET_RADIUS,
}


def check(name: str, ok: bool) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}")
    assert ok, name


def test_disk_product_section_diagonal():
    t0 = time.perf_counter()
    mat = hankel_product_matrix(1.0, D_ZBAR, D_ZBAR, 41)
    off_ok = np.max(np.abs(mat - np.diag(np.diag(mat)))) <= 1e-12
    diag_ok = all(
        abs(mat[n, n].real - 1.0 / ((n + 1) * (n + 2))) <= 1e-10 for n in range(41)
    )
    elapsed = time.perf_counter() - t0
    check("disk section of the conjugate-symbol product is diagonal "
          "with entries 1/((n+1)(n+2)), n <= 40, tol 1e-10", off_ok and diag_ok)
    check("disk section runtime < 1 s", elapsed < 1.0)


def test_bidisk_noncompact_signature():
    t0 = time.perf_counter()
    table = MomentTable(build_shadow({"kind": "bidisk"}))
    ray = monomial_ray_functional(table, ZBAR, ZBAR, ONE, ONE, 64)
    ray_ok = all(abs(v - 0.5) <= 1e-10 for v in ray.values)
    check("bidisk ray functional equals 1/2 for all m <= 64, tol 1e-10", ray_ok)
    mult_ok = True
    for n_w in (4, 8, 12, 16, 20, 24):
        sec = hankel_product_section(table, ZBAR, ZBAR, 3, n_w)
        vals = np.linalg.eigvalsh(sec.entries)
        mult = int(np.sum(np.abs(vals - 0.5) <= 1e-10))
        mult_ok = mult_ok and (mult == n_w + 1)
    check("bidisk eigenvalue 1/2 has multiplicity N_w + 1 for N_w <= 24", mult_ok)
    dich = dichotomy_experiment(table, ZBAR, ZBAR, m_max=64, n_z=3, n_w_list=(8, 16, 24))
    check("bidisk verdict bounded_away_from_zero with agreement",
          dich.verdict == BOUNDED and dich.agreement)
    elapsed = time.perf_counter() - t0
    check("bidisk non-compact signature runtime < 10 s", elapsed < 10.0)


def test_bidisk_compatible_pair_zero_product():
    t0 = time.perf_counter()
    table = MomentTable(build_shadow({"kind": "bidisk"}))
    sec = hankel_product_section(table, WBAR, ZBAR, 6, 6)
    check("bidisk mixed pair yields the zero product section, tol 1e-12",
          float(np.max(np.abs(sec.entries))) <= 1e-12)
    ray = monomial_ray_functional(table, ZBAR, WBAR, ONE, ONE, 16)
    check("bidisk mixed pair functional is identically zero",
          all(v == 0 for v in ray.values))
    dich = dichotomy_experiment(table, ZBAR, WBAR, m_max=16, n_z=3, n_w_list=(6, 12, 18))
    check("bidisk mixed pair verdict decays_to_zero with agreement",
          dich.verdict == DECAYS and dich.agreement)
    check("bidisk mixed pair runtime < 5 s", time.perf_counter() - t0 < 5.0)


def test_ball_ray_decay():
    t0 = time.perf_counter()
    table = MomentTable(build_shadow({"kind": "ball", "R": 1.0}))
    ray = monomial_ray_functional(table, ZBAR, ZBAR, ONE, ONE, 64)
    values_ok = all(
        abs(v - 1.0 / (m + 3)) <= 1e-8 for m, v in zip(ray.m_values, ray.values)
    )
    check("ball ray functional equals 1/(m+3) for m <= 64, tol 1e-8", values_ok)
    check("ball verdict decays_to_zero", ray.verdict == DECAYS)
    check("ball ray runtime < 10 s", time.perf_counter() - t0 < 10.0)


def test_intersection_domain_disk_and_ray():
    t0 = time.perf_counter()
    shadow = build_shadow(INTERSECTION)
    disks = detect_boundary_disks(shadow)
    horiz = [d for d in disks if d.orientation == "horizontal"][0]
    exact = math.sqrt(INTERSECTION_PRESET_RADIUS**2 - 1.0)
    check("intersection boundary-disk radius equals sqrt(R^2 - 1), tol 1e-9",
          abs(horiz.radius - exact) <= 1e-9)
    check("intersection boundary-disk radius is 0.676097 to 6 decimals",
          abs(horiz.radius - 0.676097) <= 5e-7)
    table = MomentTable(shadow)
    ray = monomial_ray_functional(table, ZBAR, ZBAR, ONE, ONE, 48)
    window = [abs(v) for v in ray.values[-12:]]
    check("intersection ray functional bounded below by 0.1 on the last "
          "quarter of m <= 48", min(window) >= 0.1)
    check("intersection ray error bounds reported",
          all(0.0 < e < 1e-6 for e in ray.error_bounds))
    check("intersection runtime < 60 s", time.perf_counter() - t0 < 60.0)


def test_product_identity_randomized():
    t0 = time.perf_counter()
    table = MomentTable(build_shadow({"kind": "bidisk"}))
    rng = np.random.RandomState(20240801)

    def rand_symbol(n_terms=3, max_exp=2):
        return MonomialSymbol.from_terms(
            [
                (complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
                 rng.randint(0, max_exp + 1), rng.randint(0, max_exp + 1),
                 rng.randint(0, max_exp + 1), rng.randint(0, max_exp + 1))
                for _ in range(n_terms)
            ]
        )

    def rand_poly(n_terms=2, degree=3):
        return MonomialSymbol.from_terms(
            [
                (complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
                 rng.randint(0, degree + 1), 0, rng.randint(0, degree + 1), 0)
                for _ in range(n_terms)
            ]
        )

    worst = max(
        semicommutator_identity_residual(table, rand_symbol(), rand_symbol(),
                                         rand_poly(), rand_poly())
        for _ in range(50)
    )
    check(f"product-identity residual <= 1e-10 on 50 random bidisk instances "
          f"(worst {worst:.2e})", worst <= 1e-10)
    check("identity residual runtime < 10 s", time.perf_counter() - t0 < 10.0)


def test_slice_decomposition_configurations():
    t0 = time.perf_counter()
    table = MomentTable(build_shadow({"kind": "bidisk"}))
    w_sym = MonomialSymbol.monomial(1.0, c=1)
    r1 = slice_decomposition_residual(table, ZBAR, ZBAR, ONE, ONE, ONE)
    check(f"slice decomposition, constant weight: residual {r1.residual:.2e} <= 1e-8",
          r1.residual <= 1e-8)
    r2 = slice_decomposition_residual(table, Z, ZBAR, ONE, ONE, ONE)
    check("slice decomposition, holomorphic symbol: all terms vanish",
          r2.residual <= 1e-6 and abs(r2.lhs) == 0.0)
    r3 = slice_decomposition_residual(table, ZBAR, ZBAR, ONE, ONE, w_sym)
    check(f"slice decomposition, degree-one weight: residual {r3.residual:.2e} <= 1e-6",
          r3.residual <= 1e-6)
    check("slice decomposition runtime < 30 s", time.perf_counter() - t0 < 30.0)


def test_projection_convergence_criteria():
    radii = [1.1, 1.01, 1.001]
    res = projection_convergence_experiment(D_Z, 1.0, radii, compact_radius=0.5)

    def closed_form(r):
        return (PI / 2.0) * (1.0 / r**4 - 1.0) ** 2 + (PI / 2.0) * (r**4 - 1.0) / r**8

    match_ok = all(
        abs(e2 - closed_form(r)) <= 1e-8 for r, e2 in zip(res.radii, res.errors_sq)
    )
    check("projection squared error matches its closed form at "
          "r in {1.1, 1.01, 1.001}, tol 1e-8", match_ok)
    decreasing = all(b < a for a, b in zip(res.errors_sq, res.errors_sq[1:]))
    check("projection squared error is decreasing with value < 1e-2 at r = 1.001",
          decreasing and res.errors_sq[-1] < 1e-2)
    sup = res.sup_on_compact[-1]
    check("uniform error on |z| <= 1/2 matches (1 - r^-4)/2 at r = 1.001, tol 1e-8",
          abs(sup - 0.5 * (1.0 - 1.001**-4)) <= 1e-8)
    check("squared uniform error on |z| <= 1/2 below 1e-3 at r = 1.001",
          sup * sup < 1e-3)


def test_gram_convergence_criteria():
    norm_ok = True
    for r in (0.999, 1.0001, 1.001, 0.9999):
        from bergmanlab.disk import disk_hankel_gram

        got = disk_hankel_gram(r, D_ZBAR, D_ONE, D_ZBAR, D_ONE)
        norm_ok = norm_ok and abs(got - PI * r**4 / 2.0) <= 1e-10
        got2 = disk_hankel_gram(r, D_ZBAR, D_Z, D_ZBAR, D_Z)
        norm_ok = norm_ok and abs(got2 - PI * r**6 / 12.0) <= 1e-10
    check("Gram closed forms pi r^4 / 2 and pi r^6 / 12 reproduced, tol 1e-10", norm_ok)
    gap_ok = True
    for r in (0.999, 0.9999, 1.0001, 1.001):
        gap_ok = gap_ok and abs(PI * r**4 / 2.0 - PI / 2.0) < 1e-2
        gap_ok = gap_ok and abs(PI * r**6 / 12.0 - PI / 12.0) < 1e-2
        assert abs(r - 1.0) < 1e-2
    check("Gram gaps below 1e-2 at radii within 1e-2 of 1 on both sides", gap_ok)


def test_certified_polynomial_approximation():
    series = PowerSeries.geometric_pole(2.0)
    res = approximate_by_polynomial(series, 1e-3, 1.0)
    check(f"certified approximation bound {res.certified_bound:.2e} < 1e-3",
          res.certified_bound < 1e-3)
    coeffs = np.array(res.coeffs)

    def err_sq(z):
        return np.abs(1.0 / (2.0 - z) - np.polynomial.polynomial.polyval(z, coeffs)) ** 2

    quad = math.sqrt(max(disk_quadrature(err_sq, 1.0).real, 0.0))
    check(f"posterior quadrature error {quad:.2e} within 2x of the certificate",
          quad <= 2.0 * res.certified_bound)


def test_product_norm_values():
    got = zheng_product_norm(1.0, D_ZBAR, D_ZBAR, 41)
    check(f"product norm of the conjugate pair is 1/2 (got {got:.12f}), tol 1e-10",
          abs(got - 0.5) <= 1e-10)
    hol1 = zheng_product_norm(1.0, D_Z, D_ZBAR, 20)
    hol2 = zheng_product_norm(1.0, D_ZBAR, D_Z, 20)
    check("product norm vanishes when either symbol is holomorphic, tol 1e-12",
          hol1 <= 1e-12 and hol2 <= 1e-12)
