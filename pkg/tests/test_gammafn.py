import math
import warnings
from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypergamma.errors import AccuracyWarning, DomainError
from hypergamma.gammafn import (
    DEFAULT_X_GRID,
    SPECIAL_TAGS,
    auxiliary_residuals,
    boundary_term_residual,
    closed_form,
    closed_form_residuals,
    derivative_integral_residual,
    derivative_recurrence_residual,
    dyadic_product,
    dyadic_recursion,
    dyadic_residuals,
    euler_gamma,
    functional_equation_residuals,
    gamma_deriv,
    gamma_duplication,
    gamma_reference,
    gamma_reference_result,
    gamma_reflection,
    gamma_special,
    halving_residuals,
    nested_cosine_radical,
    nested_sine_radical,
    parse_rational,
    shifted_derivative_series,
    shifted_series_residuals,
    verify_classical,
)

mp.mp.dps = 30


@pytest.mark.parametrize("s", [0.01, 0.03, 0.05, 0.1, 0.25, 1 / 3, 0.5, 1.0, 2.5, 7.0, 10.0])
def test_reference_against_mpmath(s):
    assert gamma_reference(s) == pytest.approx(float(mp.gamma(s)), rel=1e-12)


@settings(max_examples=40, deadline=None)
@given(s=st.floats(0.05, 8.0))
def test_reference_property(s):
    assert gamma_reference(s) == pytest.approx(float(mp.gamma(s)), rel=1e-12)


@settings(max_examples=30, deadline=None)
@given(a=st.floats(0.1, 6.0), b=st.floats(0.1, 6.0))
def test_log_convexity(a, b):
    mid = math.log(gamma_reference((a + b) / 2))
    assert mid <= (math.log(gamma_reference(a)) + math.log(gamma_reference(b))) / 2 + 1e-13


def test_reference_result_reports_error():
    r = gamma_reference_result(0.5)
    assert r.value == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert r.error_estimate < 1e-12


def test_reference_domain():
    with pytest.raises(DomainError):
        gamma_deriv(0, -1.0)
    with pytest.raises(DomainError):
        gamma_deriv(7, 1.0)


@pytest.mark.parametrize("order", [1, 2, 3])
@pytest.mark.parametrize("s", [0.25, 0.75, 1.0, 2.0])
def test_derivatives_against_mpmath(order, s):
    ref = float(mp.diff(mp.gamma, s, order))
    assert gamma_deriv(order, s) == pytest.approx(ref, rel=1e-10)


def test_high_order_derivative_warns():
    with pytest.warns(AccuracyWarning):
        gamma_deriv(5, 1.0)


def test_euler_gamma():
    assert euler_gamma() == pytest.approx(float(mp.euler), abs=1e-12)


def test_parse_rational():
    assert parse_rational("2/4") == Fraction(1, 2)
    assert parse_rational(" 3 ") == Fraction(3)
    for bad in ("0.25", "1e-1", "-1/2", "0"):
        with pytest.raises(ValueError):
            parse_rational(bad)


@pytest.mark.parametrize(
    "arg", ["1/2", "1/4", "1/8", "1/32", "3/4", "1/3", "1/6", "7/8", "5/8", "9/16", "2/3", "5/6", "3/5", "7/10", "4/7"]
)
def test_closed_form_against_mpmath(arg):
    q = Fraction(arg)
    gv = closed_form(q)
    assert gv is not None
    assert gv.value == pytest.approx(float(mp.gamma(mp.mpf(q.numerator) / q.denominator)), rel=1e-12)
    assert gv.residual_vs_reference < 1e-12


@pytest.mark.parametrize("arg", ["2/7", "3/8", "1/5"])
def test_closed_form_unavailable(arg):
    assert closed_form(Fraction(arg)) is None


def test_printed_closed_forms():
    assert gamma_special("one_third").value == pytest.approx(float(mp.gamma(mp.mpf(1) / 3)), rel=1e-13)
    assert gamma_special("three_quarters").value == pytest.approx(float(mp.gamma(0.75)), rel=1e-13)
    assert gamma_special("one_sixth").value == pytest.approx(float(mp.gamma(mp.mpf(1) / 6)), rel=1e-13)
    assert gamma_special("one_sixth_duplication").value == pytest.approx(float(mp.gamma(mp.mpf(1) / 6)), rel=1e-13)
    with pytest.raises(ValueError):
        gamma_special("nope")
    assert len(SPECIAL_TAGS) == 9


@pytest.mark.parametrize("n", range(1, 6))
def test_dyadic_routes(n):
    ref = float(mp.gamma(mp.mpf(2) ** -n))
    assert dyadic_product(n) == pytest.approx(ref, rel=1e-12)
    assert dyadic_recursion(n) == pytest.approx(ref, rel=1e-12)


@pytest.mark.parametrize("n", range(2, 8))
def test_nested_radicals(n):
    assert nested_sine_radical(n) == pytest.approx(2 * math.sin(math.pi / 2**n), rel=1e-14)
    assert nested_cosine_radical(n) == pytest.approx(2 * math.cos(math.pi / 2 ** (n + 1)), rel=1e-15)


def test_alternative_routes():
    assert gamma_reflection(0.3) == pytest.approx(float(mp.gamma(0.3)), rel=1e-13)
    assert gamma_duplication(1.7) == pytest.approx(float(mp.gamma(1.7)), rel=1e-13)
    with pytest.raises(DomainError):
        gamma_reflection(1.5)


def _all_pass(res):
    assert res and all(r.passed for r in res), [(r.name, r.abs_residual) for r in res if not r.passed]


def test_residual_suites_pass():
    _all_pass(halving_residuals(range(2, 13)))
    _all_pass(dyadic_residuals(range(1, 6)))
    _all_pass(closed_form_residuals())
    _all_pass(auxiliary_residuals(8, 8))
    _all_pass(functional_equation_residuals([0.1, 0.5, 3.3, 9.0]))


def test_classical_identities():
    res = verify_classical()
    _all_pass(res)
    kinds = {r.name.split("[")[0] for r in res}
    assert {"duplication", "multiplication", "reflection", "beta_gamma", "halving"} <= kinds
    with pytest.raises(ValueError):
        verify_classical(x_list=[0.0])
    assert max(DEFAULT_X_GRID) <= 10


@pytest.mark.parametrize("order", range(4))
def test_derivative_identities(order):
    assert derivative_recurrence_residual(order, 0.7).passed
    assert boundary_term_residual(order, 1.3).passed
    assert derivative_integral_residual(order, 0.9).passed


def test_shifted_series_remainder_does_not_vanish():
    with pytest.warns(AccuracyWarning):
        est = shifted_derivative_series(0.1, 5)
    g = gamma_reference(0.1)
    assert abs(est.value - g) <= est.remainder_bound * (1 + 1e-8)
    # the remainder tends to 1/s instead of 0
    assert est.remainder_bound == pytest.approx(1 / 0.1, rel=0.01)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", AccuracyWarning)
        _all_pass(shifted_series_residuals(0.2, 5))
    with pytest.raises(DomainError):
        shifted_derivative_series(0.1, 6)
