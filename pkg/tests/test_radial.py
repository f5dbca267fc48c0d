import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from suqosc.exceptions import ParameterDomainError, QuadratureError
from suqosc.radial import (
    QuadratureMethod,
    QuadratureSpec,
    RadialState,
    expectation_r2,
    laguerre,
    laguerre_explicit,
    log_gamma,
    normalization_integral,
    ode_residual,
    overlap_integral,
    quadrature,
    r2_integral,
    radial_wavefunction,
)

ALPHAS = (0.1, 0.9, 1.0, 2.5, 15.0)
METHODS = list(QuadratureMethod)


def test_log_gamma_examples():
    assert log_gamma(1.0) == 0.0
    assert log_gamma(0.5) == pytest.approx(math.log(math.sqrt(math.pi)), abs=1e-15)


def test_log_gamma_by_recurrence():
    # Gamma(7.5) = 6.5 * 5.5 * ... * 0.5 * Gamma(0.5)
    expected = math.log(math.sqrt(math.pi)) + sum(math.log(k + 0.5) for k in range(7))
    assert log_gamma(7.5) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("x", [0.0, -1.0, math.nan])
def test_log_gamma_domain(x):
    with pytest.raises(ParameterDomainError):
        log_gamma(x)


@given(a=st.floats(-0.99, 20), x=st.floats(0, 50))
def test_laguerre_low_orders(a, x):
    assert laguerre(0, a, x) == 1.0
    assert laguerre(1, a, x) == pytest.approx(1 + a - x, rel=1e-14, abs=1e-13)


def test_laguerre_explicit_sum_oracle():
    assert laguerre(5, 0.4, 2.0) == pytest.approx(laguerre_explicit(5, 0.4, 2.0), rel=1e-13)


@settings(max_examples=100)
@given(n=st.integers(0, 40), a=st.floats(-0.9, 15), x=st.floats(0, 60))
def test_laguerre_matches_mpmath(n, a, x):
    ref = float(mpmath.laguerre(n, a, x))
    scale = float(mpmath.laguerre(n, a, 0)) + float(mpmath.exp(x / 2))
    assert abs(laguerre(n, a, x) - ref) <= 1e-11 * scale


def test_laguerre_vectorised():
    x = np.linspace(0, 5, 7)
    assert np.allclose(laguerre(3, 0.5, x), [laguerre(3, 0.5, float(v)) for v in x], rtol=1e-15)


def test_laguerre_rejects_bad_parameter():
    with pytest.raises(ParameterDomainError):
        laguerre(2, -1.0, 1.0)
    with pytest.raises(ParameterDomainError):
        laguerre(-1, 0.5, 1.0)


@pytest.mark.parametrize("method", METHODS)
def test_gaussian_moments(method):
    spec = QuadratureSpec(method=method)
    assert quadrature(lambda r: np.exp(-r * r) * r * r, spec).value == pytest.approx(math.sqrt(math.pi) / 4, rel=1e-12)
    assert quadrature(lambda r: np.exp(-r * r), spec).value == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-12)


@pytest.mark.parametrize("method", METHODS)
def test_endpoint_singularity(method):
    # r**(2*0.1 - 2) r**2 e^{-r^2}: integrable power law at the origin
    res = quadrature(lambda r: r**0.2 * np.exp(-r * r), QuadratureSpec(method=method))
    assert res.value == pytest.approx(0.5 * math.gamma(0.6), rel=1e-10)
    assert res.error <= max(1e-12, 1e-10 * abs(res.value))


@pytest.mark.parametrize("method", METHODS)
def test_quadrature_gives_up_with_estimate(method):
    with pytest.raises(QuadratureError) as info:
        quadrature(lambda r: np.sin(40 * r) ** 2 * np.exp(-0.01 * r), QuadratureSpec(method=method, levels=2))
    assert math.isfinite(info.value.estimate)


def test_quadrature_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(abs_tol=0.0)


@pytest.mark.parametrize("method", METHODS)
def test_norm_of_minus_branch_state(method):
    res = normalization_integral(RadialState(3, 0.1), QuadratureSpec(method=method))
    assert res.value == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_normalization_lattice(alpha):
    for n in range(11):
        assert normalization_integral(RadialState(n, alpha)).value == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_r2_lattice(alpha):
    for n in range(11):
        st_ = RadialState(n, alpha)
        assert r2_integral(st_).value == pytest.approx(expectation_r2(st_), abs=1e-8)


@pytest.mark.parametrize("n, alpha, expected", [(0, 1.0, 1.5), (2, 0.9, 5.4), (0, 0.1, 0.6)])
def test_r2_examples(n, alpha, expected):
    st_ = RadialState(n, alpha)
    assert expectation_r2(st_) == pytest.approx(expected, abs=1e-15)
    assert r2_integral(st_, QuadratureSpec(method=QuadratureMethod.TANH_SINH)).value == pytest.approx(expected, abs=1e-8)


@pytest.mark.parametrize("alpha", [0.1, 1.0, 2.5])
def test_orthogonality(alpha):
    for n in range(7):
        for k in range(n + 1):
            val = overlap_integral(RadialState(n, alpha), RadialState(k, alpha)).value
            assert val == pytest.approx(1.0 if n == k else 0.0, abs=1e-8)


def test_ground_state_shape():
    r = np.linspace(0.05, 4, 30)
    expected = math.sqrt(4 / math.sqrt(math.pi)) * np.exp(-r * r / 2)
    assert np.allclose(radial_wavefunction(RadialState(0, 1.0), r), expected, rtol=1e-14)


def test_node_position():
    st_ = RadialState(1, 0.9)
    node = math.sqrt(1.4)
    assert radial_wavefunction(st_, node - 1e-6) * radial_wavefunction(st_, node + 1e-6) < 0
    assert abs(radial_wavefunction(st_, node)) < 1e-12


def test_minus_branch_diverges_at_origin():
    st_ = RadialState(0, 0.1)
    assert radial_wavefunction(st_, 1e-6) > radial_wavefunction(st_, 1e-3) > radial_wavefunction(st_, 1e-1)


def test_wavefunction_rejects_origin():
    with pytest.raises(ParameterDomainError):
        radial_wavefunction(RadialState(0, 1.0), 0.0)
    with pytest.raises(ParameterDomainError):
        radial_wavefunction(RadialState(0, 1.0), np.array([1.0, -1.0]))


def test_state_validation():
    with pytest.raises(ParameterDomainError):
        RadialState(0, 0.0)
    with pytest.raises(ParameterDomainError):
        RadialState(1.5, 1.0)


def test_ode_undeformed_ground_state():
    assert ode_residual(RadialState(0, 1.0), 1.5, 0.0) < 1e-12


def test_ode_plus_branch_at_q4():
    assert ode_residual(RadialState(0, 0.9), 1.4, -0.09) < 1e-9


def test_ode_wrong_energy_is_detected():
    st_ = RadialState(0, 0.9)
    r = np.linspace(0.5, 2.0, 20)
    res = ode_residual(st_, 1.5, -0.09, grid=r)
    R = np.abs(radial_wavefunction(st_, r))
    # linear in the energy offset, under the max(1, |E R|) normalisation
    assert res == pytest.approx(np.max(0.1 * R / np.maximum(1.0, 1.5 * R)), rel=1e-9)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(0, 12), alpha=st.floats(0.05, 20))
def test_ode_holds_for_any_root(n, alpha):
    assert ode_residual(RadialState(n, alpha), 2 * n + alpha + 0.5, alpha * (alpha - 1)) <= 1e-9


@pytest.mark.parametrize("n, alpha", [(0, 0.1), (2, 0.9), (4, 2.5)])
def test_analytic_derivatives_agree_with_numerical(n, alpha):
    # the residual recomputed with mpmath's numerical derivatives
    st_ = RadialState(n, alpha)
    c, e = alpha * (alpha - 1), 2 * n + alpha + 0.5
    R = lambda r: st_.norm * mpmath.exp(-r * r / 2) * r ** (alpha - 1) * mpmath.laguerre(n, alpha - 0.5, r * r)  # noqa: E731
    mpmath.mp.dps = 30
    try:
        for r in (0.3, 1.1, 2.4):
            r = mpmath.mpf(r)
            d1, d2 = mpmath.diff(R, r, 1), mpmath.diff(R, r, 2)
            hr = -0.5 * (d2 + 2 * d1 / r - c * R(r) / r**2) + 0.5 * r * r * R(r)
            assert abs(float(hr - e * R(r))) < 1e-12
            assert float(R(r)) == pytest.approx(radial_wavefunction(st_, float(r)), rel=1e-12)
    finally:
        mpmath.mp.dps = 15
    assert ode_residual(st_, e, c, grid=[0.3, 1.1, 2.4]) < 1e-12
