import math
from math import comb

import numpy as np
import pytest

from bergmanlab.moments import MomentTable, monomial_norm
from bergmanlab.quadrature import richardson_trapezoid
from bergmanlab.shadow import INTERSECTION_PRESET_RADIUS, build_shadow

PI = math.pi
INTERSECTION = {"kind": "intersection", "r_z": 1.0, "r_w": 1.0, "R": INTERSECTION_PRESET_RADIUS}


def bidisk_table():
    return MomentTable(build_shadow({"kind": "bidisk"}))


def ball_table(R=1.0):
    return MomentTable(build_shadow({"kind": "ball", "R": R}))


def intersection_exact_radial(P, q):
    """Exact m(P, q) for the preset intersection: binomial after t = y^2.

    Valid for even P and q with small P, where the alternating sum is stable.
    """
    R2 = INTERSECTION_PRESET_RADIUS**2
    ys2 = R2 - 1.0
    s, m = P // 2, q // 2
    piece1 = ys2 ** (m + 1) / (2 * m + 2)
    piece2 = sum(
        comb(s, i) * R2 ** (s - i) * (-1) ** i * (1.0 - ys2 ** (m + i + 1)) / (m + i + 1)
        for i in range(s + 1)
    )
    return piece1 + 0.5 * piece2


def test_bidisk_moments_closed_form():
    t = bidisk_table()
    assert t.moment(0, 0) == pytest.approx(PI**2, abs=1e-12)
    assert t.moment(2, 0) == pytest.approx(PI**2 / 2.0, abs=1e-12)
    for p in range(0, 8, 2):
        for q in range(0, 8, 2):
            assert t.moment(p, q) == pytest.approx(
                4.0 * PI**2 / ((p + 2) * (q + 2)), rel=1e-14
            )


def test_scaled_bidisk_moments():
    t = MomentTable(build_shadow({"kind": "bidisk", "r_z": 0.5, "r_w": 2.0}))
    assert t.moment(2, 4) == pytest.approx(
        4.0 * PI**2 * 0.5**4 * 2.0**6 / (4 * 6), rel=1e-14
    )


def test_ball_volume():
    assert ball_table().moment(0, 0) == pytest.approx(PI**2 / 2.0, rel=1e-13)


def test_ball_volume_polar_quadrature_oracle():
    # (2 pi)^2 * double integral of x y over the quarter disk, by nested GL
    nodes, weights = np.polynomial.legendre.leggauss(200)
    y = 0.5 * (nodes + 1.0)
    wy = 0.5 * weights
    total = 0.0
    for yi, wi in zip(y, wy):
        xm = math.sqrt(1.0 - yi * yi)
        total += wi * yi * xm * xm / 2.0
    oracle = (2.0 * PI) ** 2 * total
    assert ball_table().moment(0, 0) == pytest.approx(oracle, rel=1e-10)


def test_ball_moment_beta_identity():
    # mu(2a, 2b) = pi^2 a! b! / (a + b + 2)! on the unit ball
    t = ball_table()
    for a in range(4):
        for b in range(4):
            expected = PI**2 * math.factorial(a) * math.factorial(b) / math.factorial(a + b + 2)
            assert t.moment(2 * a, 2 * b) == pytest.approx(expected, rel=1e-12)


def test_monomial_norms():
    t = bidisk_table()
    assert monomial_norm(t, 0, 0) == pytest.approx(PI, rel=1e-14)
    assert monomial_norm(t, 1, 1) ** 2 == pytest.approx(PI**2 / 4.0, rel=1e-13)
    assert ball_table().norm_sq(0, 0) == pytest.approx(PI**2 / 2.0, rel=1e-13)


def test_intersection_moments_vs_exact_binomial():
    t = MomentTable(build_shadow(INTERSECTION))
    for P, q in [(2, 0), (4, 0), (2, 96), (4, 96), (6, 40), (8, 12)]:
        val, err = t.radial_moment(P, q)
        exact = intersection_exact_radial(P, q)
        assert val == pytest.approx(exact, rel=1e-10)
        assert err < 1e-8


def test_intersection_moments_vs_richardson_trapezoid():
    t = MomentTable(build_shadow(INTERSECTION))
    shadow = t.shadow
    y_split = shadow.breakpoints()[0]
    for P, q in [(2, 8), (4, 20)]:
        def f(y, P=P, q=q):
            prof = np.minimum(1.0, np.sqrt(np.maximum(t.shadow.params[2] ** 2 - y * y, 0.0)))
            return y ** (q + 1) * prof**P

        left, _ = richardson_trapezoid(f, 0.0, y_split, n_start=256)
        right, _ = richardson_trapezoid(f, y_split, 1.0, n_start=256)
        val, _ = t.radial_moment(P, q)
        assert val == pytest.approx(left + right, rel=1e-9)


def test_moment_error_bounds_reported():
    t = MomentTable(build_shadow(INTERSECTION))
    val, err = t.moment_with_error(2, 40)
    assert val > 0
    assert 0 < err < 1e-8
    assert t.provenance()["method"] == "quadrature"
    assert bidisk_table().provenance()["method"] == "closed_form"


def test_moments_monotone_inside_unit_bidisk():
    for spec in ({"kind": "bidisk"}, {"kind": "ball", "R": 1.0}, INTERSECTION):
        t = MomentTable(build_shadow(spec))
        for p in range(0, 6, 2):
            for q in range(0, 6, 2):
                assert t.moment(p + 2, q) < t.moment(p, q)
                assert t.moment(p, q + 2) < t.moment(p, q)


def test_moment_positivity_and_cache():
    t = MomentTable(build_shadow(INTERSECTION))
    v1 = t.moment(2, 2)
    v2 = t.moment(2, 2)
    assert v1 == v2
    assert v1 > 0
    assert t.provenance()["cached_radial_moments"] >= 1


def test_moment_rejects_negative_exponents():
    with pytest.raises(ValueError):
        bidisk_table().moment(-1, 0)


def test_sampled_profile_moments_quadrature():
    # linear profile r_h(y) = 1 - y/2: m(P, q) has an elementary closed form
    t = MomentTable(build_shadow({"kind": "sampled", "points": [[0.0, 1.0], [1.0, 0.5]]}))

    def exact(P, q):
        # int_0^1 y^{q+1} (1 - y/2)^P dy via binomial expansion
        return sum(
            comb(P, i) * (-0.5) ** i / (q + 2 + i) for i in range(P + 1)
        )

    for P, q in [(2, 0), (4, 2), (6, 6)]:
        val, err = t.radial_moment(P, q)
        assert val == pytest.approx(exact(P, q), rel=1e-11)
