"""Numeric kernel: double-exponential quadrature, binomial arc series, AGM
and a safeguarded monotone root finder.

All routines are pure functions of their arguments. Integrands may return
complex values; the quadrature sums are then complex as well.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .errors import DomainError, InvalidInterval, NoBracket, NonConvergence, SlowConvergence

EPS = sys.float_info.epsilon
HALF_PI = 0.5 * math.pi

# Largest tanh-sinh abscissa parameter: keeps 1 - |x| above ~1e-275 so the
# endpoint distance handed to integrands never underflows to zero.
_TS_TMAX = 6.0
# exp-sinh range on a half line: x runs over [exp(-70.7), exp(70.7)].
_ES_TMAX = 4.5
_MIN_LEVEL = 3


@dataclass(frozen=True)
class ToleranceConfig:
    """Accuracy targets shared by the quadrature, series and iteration routines."""

    target_abs: float = 1e-13
    target_rel: float = 1e-13
    max_levels: int = 10
    max_terms: int = 200_000

    def __post_init__(self):
        if not self.target_abs > 0 or not self.target_rel > 0:
            raise ValueError("tolerances must be positive")
        if self.target_abs < EPS * 1e-3:
            # absolute targets far below double resolution are meaningless
            raise ValueError(f"target_abs={self.target_abs} below working precision")
        if self.max_levels < 1 or self.max_terms < 1:
            raise ValueError("max_levels and max_terms must be >= 1")

    def accepts(self, delta: float, value: float) -> bool:
        return delta <= max(self.target_abs, self.target_rel * abs(value))

    def tightened(self, factor: float = 0.5) -> "ToleranceConfig":
        return ToleranceConfig(
            max(self.target_abs * factor, EPS),
            max(self.target_rel * factor, EPS),
            self.max_levels,
            self.max_terms,
        )


DEFAULT_TOL = ToleranceConfig()


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int

    def __float__(self):
        return float(self.value)


@lru_cache(maxsize=None)
def _tanh_sinh_level(level: int):
    """Nodes (1 - |x|, weight) added at `level`; level 0 includes t = 0."""
    h = 2.0 ** -level
    step = 1 if level == 0 else 2
    nodes = []
    j = 0 if level == 0 else 1
    while j * h <= _TS_TMAX:
        t = j * h
        u = HALF_PI * math.sinh(t)
        ch = math.cosh(u)
        comp = math.exp(-u) / ch
        w = h * HALF_PI * math.cosh(t) / (ch * ch)
        nodes.append((comp, w))
        j += step
    return tuple(nodes)


@lru_cache(maxsize=None)
def _exp_sinh_level(level: int):
    """Nodes (x, weight) on (0, inf) added at `level`."""
    h = 2.0 ** -level
    n = int(_ES_TMAX / h)
    nodes = []
    for j in range(-n, n + 1):
        if level > 0 and j % 2 == 0:
            continue
        t = j * h
        x = math.exp(HALF_PI * math.sinh(t))
        nodes.append((x, h * HALF_PI * math.cosh(t) * x))
    return tuple(nodes)


def _check_finite(v, where):
    if not (math.isfinite(v.real) and math.isfinite(v.imag)):
        raise DomainError(f"integrand is not finite at x={where!r}")


def integrate_finite(
    f: Callable,
    a: float,
    b: float,
    tol: Optional[ToleranceConfig] = None,
    *,
    with_complement: bool = False,
) -> QuadratureResult:
    """Tanh-sinh quadrature of `f` over [a, b].

    Integrable algebraic endpoint singularities are absorbed by the
    variable change. With ``with_complement=True`` the integrand is called as
    ``f(x, x - a, b - x)``, where the two distances are computed without
    cancellation; singular integrands should use them near the endpoints.
    Otherwise ``f(x)`` is called and nodes that round onto an endpoint are
    skipped.

    The error estimate is the difference between the last two refinement
    levels. It is a heuristic, not a bound.
    """
    tol = tol or DEFAULT_TOL
    if not a < b:
        raise InvalidInterval(f"need a < b, got a={a}, b={b}")
    half = 0.5 * (b - a)

    def level_sum(level):
        s = 0.0
        count = 0
        for comp, w in _tanh_sinh_level(level):
            d = half * comp
            if comp == 1.0:
                x = a + half
                pts = ((x, half, half),)
            else:
                far = half * (2.0 - comp)
                pts = ((b - d, far, d), (a + d, d, far))
            for x, da, db in pts:
                if with_complement:
                    v = f(x, da, db)
                elif x <= a or x >= b:
                    continue
                else:
                    v = f(x)
                _check_finite(v, x)
                s += w * v
                count += 1
        return s, count

    total, evals = level_sum(0)
    total *= half
    prev = total
    for level in range(1, tol.max_levels + 1):
        s, c = level_sum(level)
        evals += c
        total = 0.5 * prev + half * s
        delta = abs(total - prev)
        if level >= _MIN_LEVEL and tol.accepts(delta, abs(total)):
            return QuadratureResult(total, delta, evals)
        prev = total
    raise NonConvergence(
        f"tanh-sinh did not converge in {tol.max_levels} levels (last delta {delta:.3e})",
        estimate=total,
    )


def integrate_half_line(f: Callable, tol: Optional[ToleranceConfig] = None) -> QuadratureResult:
    """Exp-sinh quadrature of `f` over (0, inf)."""
    tol = tol or DEFAULT_TOL

    def level_sum(level):
        s = 0.0
        nodes = _exp_sinh_level(level)
        for x, w in nodes:
            v = f(x)
            _check_finite(v, x)
            s += w * v
        return s, len(nodes)

    prev, evals = level_sum(0)
    for level in range(1, tol.max_levels + 1):
        s, c = level_sum(level)
        evals += c
        total = 0.5 * prev + s
        delta = abs(total - prev)
        if level >= _MIN_LEVEL and tol.accepts(delta, abs(total)):
            return QuadratureResult(total, delta, evals)
        prev = total
    raise NonConvergence(
        f"exp-sinh did not converge in {tol.max_levels} levels (last delta {delta:.3e})",
        estimate=total,
    )


def integrate_real_line(f: Callable, tol: Optional[ToleranceConfig] = None) -> QuadratureResult:
    """Integral of `f` over the whole real line, split at 0.

    Each half line is handled by exp-sinh, so the integrand only has to
    decay exponentially on either side.
    """
    tol = tol or DEFAULT_TOL
    # each half gets half the absolute budget
    half_tol = ToleranceConfig(
        max(tol.target_abs / 2, EPS), tol.target_rel, tol.max_levels, tol.max_terms
    )
    right = integrate_half_line(f, half_tol)
    left = integrate_half_line(lambda x: f(-x), half_tol)
    return QuadratureResult(
        right.value + left.value,
        right.error_estimate + left.error_estimate,
        right.evaluations + left.evaluations,
    )


SERIES_RADIUS_LIMIT = 0.995


def sum_arcs_series(k: int, n: int, x, tol: Optional[ToleranceConfig] = None, *, hyperbolic=False):
    """Binomial series of the order-(k, n) arc integral.

    Sums ``sum_m c_m x^(mn+1)/(mn+1)`` with ``c_m = (-1)^m binom(-1/k, m)``,
    which integrates ``(1 - t^n)^(-1/k)`` termwise. With ``hyperbolic=True``
    the signs alternate, giving the integral of ``(1 + t^n)^(-1/k)``.
    `x` may be complex.

    Raises DomainError for ``|x| >= 0.995``: the tail decays too slowly there
    and closed forms should be used instead.
    """
    tol = tol or DEFAULT_TOL
    if k < 2 or n < 1:
        raise DomainError(f"need k >= 2 and n >= 1, got k={k}, n={n}")
    r = abs(x)
    if r >= SERIES_RADIUS_LIMIT:
        raise DomainError(f"|x|={r} too close to the radius of convergence")
    if x == 0:
        return 0.0 * x
    xn = x**n
    if hyperbolic:
        xn = -xn
    stop = tol.target_abs * (1.0 - r**n)
    inv_k = 1.0 / k
    coeff = 1.0
    power = x
    total = x
    for m in range(1, tol.max_terms + 1):
        coeff *= (m - 1 + inv_k) / m
        power *= xn
        term = coeff * power / (m * n + 1)
        total += term
        if abs(term) < stop:
            return total
    raise SlowConvergence(f"arc series needs more than {tol.max_terms} terms at |x|={r}")


def agm(a: float, b: float, tol: Optional[ToleranceConfig] = None) -> float:
    """Arithmetic-geometric mean of two positive numbers."""
    tol = tol or DEFAULT_TOL
    if not (a > 0 and b > 0):
        raise DomainError(f"agm needs positive arguments, got {a}, {b}")
    for _ in range(64):
        if abs(a - b) <= max(tol.target_abs, 4 * EPS * max(a, b)):
            return 0.5 * (a + b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    raise NonConvergence("agm iteration did not settle", estimate=a)


def find_root_monotone(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: Optional[ToleranceConfig] = None,
    fprime: Optional[Callable[[float], float]] = None,
    max_iter: int = 200,
) -> float:
    """Root of a strictly monotone `f` in [lo, hi].

    Bisection, accelerated by Newton steps when `fprime` is given. A Newton
    step that leaves the current bracket is replaced by a bisection step.
    Stops when ``|f| <= target_abs``, when a Newton step falls below two ulps,
    or when the bracket cannot be split any further in floating point.
    """
    tol = tol or DEFAULT_TOL
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise NoBracket(f"f({lo})={flo} and f({hi})={fhi} have the same sign")
    increasing = fhi > 0
    x = 0.5 * (lo + hi)
    for _ in range(max_iter):
        fx = f(x)
        if abs(fx) <= tol.target_abs:
            return x
        if (fx > 0) == increasing:
            hi = x
        else:
            lo = x
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            return x
        x_new = None
        if fprime is not None:
            d = fprime(x)
            if d != 0 and math.isfinite(d):
                step = fx / d
                if abs(step) <= 2 * math.ulp(x):
                    return x
                x_new = x - step
                if not lo < x_new < hi:
                    x_new = None
        x = mid if x_new is None else x_new
    raise NonConvergence(f"root not isolated after {max_iter} iterations", estimate=x)
