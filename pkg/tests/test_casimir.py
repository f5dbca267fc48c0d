import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import circle_at_cos
from suqosc.casimir import (
    CasimirKind,
    alpha_discriminant,
    RootVariant,
    casimir_eigenvalue,
    classification_boundary,
    classify_level,
    classify_roots,
    gamma_quantity,
)
from suqosc.deform import DeformationParameter, Regime
from suqosc.exceptions import RegimeError

CQ, CQP = CasimirKind.CQ, CasimirKind.CQ_PRIME


@pytest.mark.parametrize("kind", list(CasimirKind))
@pytest.mark.parametrize("regime", list(Regime))
def test_undeformed_limit(kind, regime):
    p = DeformationParameter(regime, 1e-8)
    assert casimir_eigenvalue(2, kind, p) == pytest.approx(6.0, abs=1e-6)


def test_cq_l0_at_q4(q4):
    # [1/2]_q = 1/(2 cosh(w/2)) = 2/5
    assert casimir_eigenvalue(0, CQ, q4) == pytest.approx(-0.09, abs=1e-15)


@pytest.mark.parametrize("w", [0.3, 1.1, 2.0, 2.9])
def test_cqprime_l1_on_circle_is_2cosw(w):
    p = DeformationParameter.circle(w)
    assert casimir_eigenvalue(1, CQP, p) == pytest.approx(2.0 * math.cos(w), abs=1e-14)


@pytest.mark.parametrize("regime", list(Regime))
@pytest.mark.parametrize("w", [0.2, 1.0, 2.5])
@pytest.mark.parametrize("l", range(6))
def test_casimirs_differ_by_a_constant(regime, w, l):
    # [l][l+1] = [l+1/2]^2 - [1/2]^2
    p = DeformationParameter(regime, w)
    half = casimir_eigenvalue(0, CQ, p) + 0.25
    assert casimir_eigenvalue(l, CQP, p) == pytest.approx(casimir_eigenvalue(l, CQ, p) + 0.25 - half, rel=1e-12, abs=1e-12)


def test_negative_l_rejected(q2):
    with pytest.raises(ValueError):
        casimir_eigenvalue(-1, CQ, q2)


def test_gamma_vanishes_for_cqprime_l0():
    assert gamma_quantity(0, CQP, DeformationParameter.circle(1.0)) == 0.0


def test_gamma_cqprime_boundary():
    p = circle_at_cos(-1.0 / 8.0)
    assert gamma_quantity(1, CQP, p) == pytest.approx(-math.sin(p.w) ** 2, abs=1e-14)


def test_gamma_cq_boundary():
    p = circle_at_cos((-7.0 + math.sqrt(17.0)) / 16.0)
    assert abs(gamma_quantity(1, CQ, p)) < 1e-10


def test_boundary_polynomial_factorisation():
    # 8c^3 - c^2 - 6c - 1 = (c - 1)(8c^2 + 7c + 1)
    c = np.linspace(-1, 1, 11)
    assert np.allclose(8 * c**3 - c**2 - 6 * c - 1, (c - 1) * (8 * c**2 + 7 * c + 1))
    assert np.allclose(np.sort(np.roots([8, 7, 1])), [(-7 - math.sqrt(17)) / 16, (-7 + math.sqrt(17)) / 16])


def test_gamma_requires_circle(q2):
    with pytest.raises(RegimeError):
        gamma_quantity(1, CQ, q2)


def test_vanishing_root_discarded():
    cls = classify_roots(0.0)
    assert cls.variant is RootVariant.ONE_ROOT
    assert cls.roots == (1.0,)


def test_two_roots_example():
    cls = classify_roots(-0.09)
    assert cls.variant is RootVariant.TWO_ROOTS
    assert cls.alpha_minus == pytest.approx(0.1, abs=1e-15)
    assert cls.alpha_plus == pytest.approx(0.9, abs=1e-15)


def test_double_half():
    cls = classify_roots(-0.25)
    assert cls.variant is RootVariant.DOUBLE_HALF
    assert cls.roots == (0.5,)


def test_no_root():
    cls = classify_roots(-0.3)
    assert cls.variant is RootVariant.NO_ROOT
    assert cls.roots == ()


def test_classify_requires_finite():
    with pytest.raises(ValueError):
        classify_roots(math.nan)


@given(st.floats(-0.2499, 1e6))
def test_roots_solve_quadratic(c):
    cls = classify_roots(c)
    for a in cls.roots:
        assert a > 0
        assert abs(a * (a - 1) - c) <= 1e-12 * max(1.0, abs(c))
    if cls.variant is RootVariant.TWO_ROOTS:
        assert 0 < cls.alpha_minus < cls.alpha_plus
    if cls.variant is RootVariant.ONE_ROOT:
        assert 0.5 - math.sqrt(0.25 + c) <= 1e-16


@given(st.floats(-1e3, -0.2500001))
def test_no_root_below_discriminant(c):
    assert classify_roots(c).variant is RootVariant.NO_ROOT


@pytest.mark.parametrize("w", np.linspace(0.01, 50.0, 60))
def test_real_cq_structure(w):
    p = DeformationParameter.real(w)
    assert classify_level(0, CQ, p).variant is RootVariant.TWO_ROOTS
    for l in range(1, 6):
        assert classify_level(l, CQ, p).variant is RootVariant.ONE_ROOT


@pytest.mark.parametrize("w", np.linspace(0.01, 50.0, 60))
def test_real_cqprime_always_one_root(w):
    p = DeformationParameter.real(w)
    for l in range(6):
        assert classify_level(l, CQP, p).variant is RootVariant.ONE_ROOT


@pytest.mark.parametrize("w", np.linspace(0.01, math.pi - 0.01, 80))
def test_circle_cq_l0_single_root(w):
    p = DeformationParameter.circle(w)
    assert classify_level(0, CQ, p).variant is RootVariant.ONE_ROOT


@pytest.mark.parametrize(
    "kind, bracket, expected",
    [
        (CQ, (-0.45, -0.1), (-7 + math.sqrt(17)) / 16),
        (CQ, (-0.9, -0.55), (-7 - math.sqrt(17)) / 16),
        (CQP, (-0.3, -0.05), -1 / 8),
        (CQP, (-0.05, 0.3), 0.0),
    ],
)
def test_bisection_recovers_thresholds(kind, bracket, expected):
    assert classification_boundary(1, kind, *bracket) == pytest.approx(expected, abs=1e-10)


def test_bisection_needs_a_change():
    with pytest.raises(ValueError):
        classification_boundary(1, CQ, 0.1, 0.9)


def test_cancellation_free_discriminant():
    # 1/4 + C(0) = [1/2]^2 ~ e^-50 is lost when formed from C(0) alone
    p = DeformationParameter.real(50.0)
    assert 0.25 + casimir_eigenvalue(0, CQ, p) == 0.0
    assert alpha_discriminant(0, CQ, p) == pytest.approx(math.exp(-50.0), rel=1e-9)
    cls = classify_level(0, CQ, p)
    assert cls.alpha_plus - cls.alpha_minus == pytest.approx(2 * math.exp(-25.0), rel=1e-4)
