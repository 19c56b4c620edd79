import math

import numpy as np
import pytest

from bergmanlab.approx import PowerSeries, approximate_by_polynomial
from bergmanlab.errors import TailBoundUnavailable
from bergmanlab.quadrature import disk_quadrature


def test_constant_is_its_own_approximation():
    res = approximate_by_polynomial(PowerSeries.polynomial([1.0]), 1e-6, 1.0)
    assert res.coeffs == (1.0 + 0j,)
    assert res.certified_bound == 0.0


def test_monomial_fixed_point():
    res = approximate_by_polynomial(PowerSeries.polynomial([0.0, 0.0, 0.0, 2.5]), 0.5, 1.0)
    assert res.certified_bound == 0.0
    assert res.coeffs[-1] == 2.5
    assert res.degree == 3


def test_geometric_series_certificate():
    series = PowerSeries.geometric_pole(2.0)
    res = approximate_by_polynomial(series, 1e-3, 1.0)
    assert res.certified_bound < 1e-3
    assert 0.0 < res.rho < 1.0
    assert res.degree >= 5


def test_geometric_series_posterior_quadrature():
    series = PowerSeries.geometric_pole(2.0)
    res = approximate_by_polynomial(series, 1e-3, 1.0)
    coeffs = np.array(res.coeffs)

    def err_sq(z):
        f = 1.0 / (2.0 - z)
        h = np.polynomial.polynomial.polyval(z, coeffs)
        return np.abs(f - h) ** 2

    quad = math.sqrt(disk_quadrature(err_sq, 1.0).real)
    assert quad <= res.certified_bound * (1.0 + 1e-9)
    assert quad <= 2.0 * res.certified_bound
    # certificate should be meaningfully tight, not orders off
    assert res.certified_bound <= 50.0 * quad


def test_tighter_epsilon_gives_higher_degree():
    series = PowerSeries.geometric_pole(2.0)
    loose = approximate_by_polynomial(series, 1e-2, 1.0)
    tight = approximate_by_polynomial(series, 1e-6, 1.0)
    assert tight.degree > loose.degree
    assert tight.certified_bound < 1e-6


def test_missing_majorant_rejected():
    series = PowerSeries(head=(), tail_rule=lambda n: 0.5**n)
    with pytest.raises(TailBoundUnavailable):
        approximate_by_polynomial(series, 1e-3, 1.0)


def test_majorant_not_covering_disk_rejected():
    series = PowerSeries(head=(), tail_rule=lambda n: 0.9**n, bound_m=1.0, bound_s=0.9)
    with pytest.raises(TailBoundUnavailable):
        approximate_by_polynomial(series, 1e-3, 1.0)


def test_certificate_split_is_recorded():
    series = PowerSeries.geometric_pole(2.0)
    res = approximate_by_polynomial(series, 1e-4, 1.0)
    assert res.certified_bound == pytest.approx(
        res.dilation_error + res.truncation_error
    )
    assert res.dilation_error <= 0.5e-4 + 1e-12
