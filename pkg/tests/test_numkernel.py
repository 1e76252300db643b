import math

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypergamma.errors import DomainError, InvalidInterval, NoBracket, NonConvergence, SlowConvergence
from hypergamma.numkernel import (
    ToleranceConfig,
    agm,
    find_root_monotone,
    integrate_finite,
    integrate_half_line,
    integrate_real_line,
    sum_arcs_series,
)


def test_tolerance_config_validation():
    with pytest.raises(ValueError):
        ToleranceConfig(target_abs=0.0)
    with pytest.raises(ValueError):
        ToleranceConfig(target_abs=1e-25)
    with pytest.raises(ValueError):
        ToleranceConfig(max_levels=0)
    t = ToleranceConfig(1e-10, 1e-10)
    assert t.accepts(1e-11, 1.0)
    assert not t.accepts(1e-9, 1.0)
    assert t.tightened(0.5).target_abs == pytest.approx(5e-11)


def test_polynomial_integral():
    r = integrate_finite(lambda x: x * x, 0.0, 1.0)
    assert r.value == pytest.approx(1 / 3, abs=1e-15)
    assert r.evaluations > 0


def test_endpoint_singularity_with_complement():
    # 1 - t^2 written with the distance to 1 avoids cancellation
    r = integrate_finite(lambda t, da, db: 1 / math.sqrt(db * (2 - db)), 0.0, 1.0, with_complement=True)
    assert r.value == pytest.approx(math.pi / 2, abs=1e-14)


def test_both_endpoints_singular():
    r = integrate_finite(lambda t, da, db: (da * db) ** -0.5, 0.0, 1.0, with_complement=True)
    assert r.value == pytest.approx(math.pi, abs=1e-13)


def test_invalid_interval():
    with pytest.raises(InvalidInterval):
        integrate_finite(math.exp, 1.0, 1.0)
    with pytest.raises(InvalidInterval):
        integrate_finite(math.exp, 2.0, 1.0)


def test_nonconvergence_carries_estimate():
    with pytest.raises(NonConvergence) as exc:
        integrate_finite(math.exp, 0.0, 1.0, ToleranceConfig(max_levels=1))
    assert exc.value.estimate == pytest.approx(math.e - 1, rel=1e-3)


def test_nonfinite_integrand_rejected():
    with pytest.raises(DomainError):
        integrate_finite(lambda x: math.inf, 0.0, 1.0)


def test_half_and_real_line():
    assert integrate_half_line(lambda x: math.exp(-x)).value == pytest.approx(1.0, abs=1e-14)
    assert integrate_real_line(lambda x: math.exp(-x * x)).value == pytest.approx(math.sqrt(math.pi), abs=1e-14)


def test_complex_integrand():
    r = integrate_finite(lambda x: complex(math.cos(x), math.sin(x)), 0.0, math.pi)
    assert abs(r.value - 2j) < 1e-14


@settings(max_examples=30, deadline=None)
@given(a=st.floats(-2, 0), b=st.floats(0.1, 1), c=st.floats(1.1, 3))
def test_integral_additivity(a, b, c):
    f = lambda x: math.exp(-x) * math.cos(3 * x)  # noqa: E731
    whole = integrate_finite(f, a, c).value
    parts = integrate_finite(f, a, b).value + integrate_finite(f, b, c).value
    assert whole == pytest.approx(parts, abs=1e-12)


def test_arcs_series_classical():
    assert sum_arcs_series(2, 2, 0.5) == pytest.approx(math.asin(0.5), abs=1e-14)
    assert sum_arcs_series(2, 2, 0.5, hyperbolic=True) == pytest.approx(math.asinh(0.5), abs=1e-14)
    assert sum_arcs_series(2, 2, 0.0) == 0.0


def test_arcs_series_complex_against_mpmath():
    z = 0.3 + 0.4j
    assert abs(sum_arcs_series(2, 2, z) - complex(mp.asin(z))) < 1e-14


def test_arcs_series_guards():
    with pytest.raises(DomainError):
        sum_arcs_series(2, 2, 0.996)
    with pytest.raises(DomainError):
        sum_arcs_series(1, 2, 0.5)
    with pytest.raises(SlowConvergence):
        sum_arcs_series(2, 2, 0.9, ToleranceConfig(max_terms=3))


def test_agm_against_mpmath():
    assert agm(1.0, math.sqrt(2)) == pytest.approx(float(mp.agm(1, mp.sqrt(2))), rel=1e-15)
    with pytest.raises(DomainError):
        agm(0.0, 1.0)


@settings(max_examples=50, deadline=None)
@given(a=st.floats(1e-3, 1e3), b=st.floats(1e-3, 1e3), lam=st.floats(1e-2, 1e2))
def test_agm_properties(a, b, lam):
    m = agm(a, b)
    assert m == pytest.approx(agm(b, a), rel=1e-14)
    assert agm(lam * a, lam * b) == pytest.approx(lam * m, rel=1e-13)
    assert math.sqrt(a * b) * (1 - 1e-14) <= m <= (a + b) / 2 * (1 + 1e-14)


def test_root_finder():
    x = find_root_monotone(lambda x: math.cos(x) - x, 0.0, 1.0, fprime=lambda x: -math.sin(x) - 1)
    assert x == pytest.approx(0.7390851332151607, abs=1e-15)
    y = find_root_monotone(lambda x: x**3 - 2, 0.0, 2.0)
    assert y == pytest.approx(2 ** (1 / 3), abs=1e-13)
    with pytest.raises(NoBracket):
        find_root_monotone(lambda x: x + 5, 0.0, 1.0)


def test_root_finder_resolves_steep_function():
    # near the square-root singularity one ulp in x is a large step in f
    f = lambda x: -math.sqrt(1 - x) + 1e-8  # noqa: E731
    x = find_root_monotone(f, 0.0, 1.0, fprime=lambda x: 0.5 / math.sqrt(1 - x))
    assert abs(x - (1 - 1e-16)) <= 2 * math.ulp(1.0)
