"""Hyperelliptic constants pi_n and the auxiliary constants pi_{l,n,k}.

    pi_n        = 2 * int_0^1 (1 - t^n)^(-1/2) dt
    pi_{l,n,k}  = 2 * int_0^1 (1 - t^n)^(-k/l) dt

pi_2 is pi and pi_4 is the lemniscate constant. Each constant can be computed
by quadrature, from Gamma values through the Beta function, or (pi_n only)
from the binomial series at x = 1 with an asymptotic tail correction.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional

from .numkernel import DEFAULT_TOL, EPS, ToleranceConfig, integrate_finite
from .residuals import IdentityResidual, bound, residual


class Method(str, enum.Enum):
    QUADRATURE = "quadrature"
    BETA = "beta"
    SERIES = "series"


@dataclass(frozen=True)
class ConstantValue:
    label: str
    value: float
    method: Method
    achieved_tol: float


def one_minus_power(n: int, t: float, dist_to_one: float) -> float:
    """``1 - t^n`` without cancellation when t is close to 1."""
    if t > 0.5:
        return -math.expm1(n * math.log1p(-dist_to_one))
    return 1.0 - t**n


def _aux_integrand(n: int, exponent: float):
    def f(t, da, db):
        return one_minus_power(n, t, db) ** -exponent

    return f


# Large-m expansion of binom(2m, m)/4^m = Gamma(m+1/2)/(sqrt(pi) Gamma(m+1)):
# sqrt(pi*m) * binom(2m, m)/4^m ~ sum_i C[i] m^-i.
_CENTRAL_BINOMIAL_ASYMPTOTIC = (
    1.0,
    -1 / 8,
    1 / 128,
    5 / 1024,
    -21 / 32768,
    -399 / 262144,
    869 / 4194304,
    39325 / 33554432,
)
_BERNOULLI_EVEN = (1 / 6, -1 / 30, 1 / 42, -1 / 30)


def _hurwitz_zeta_large(s: float, a: float) -> float:
    """sum_{j>=0} (a + j)^-s by Euler-Maclaurin at the origin; needs a >~ 100."""
    total = a ** (1 - s) / (s - 1) + 0.5 * a**-s
    rising = s
    fact = 2.0
    for j, b in enumerate(_BERNOULLI_EVEN, start=1):
        total += b / fact * rising * a ** (-s - 2 * j + 1)
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        fact *= (2 * j + 1) * (2 * j + 2)
    return total


def _series_half_pi_n(n: int, terms: int):
    """pi_n / 2 as sum_m binom(2m,m)/(4^m (nm+1)) plus a tail estimate.

    The first `terms` terms are summed exactly. The remainder is expanded in
    powers m^(-3/2-p) and summed with Hurwitz zeta values.
    """
    parts = []
    c = 1.0
    for m in range(terms):
        if m:
            c *= (m - 0.5) / m
        parts.append(c / (n * m + 1))
    head = math.fsum(parts)

    # coefficients of m^(-3/2-p) in  sqrt(pi) * c_m / (n m + 1) * n
    P = len(_CENTRAL_BINOMIAL_ASYMPTOTIC)
    d = [
        sum(_CENTRAL_BINOMIAL_ASYMPTOTIC[i] * (-1.0 / n) ** (p - i) for i in range(p + 1))
        for p in range(P)
    ]
    contributions = [d[p] * _hurwitz_zeta_large(1.5 + p, terms) for p in range(P)]
    tail = math.fsum(contributions) / (n * math.sqrt(math.pi))
    return head + tail, abs(contributions[-1]) / n + 64 * EPS


@lru_cache(maxsize=4096)
def _pi_n_cached(n: int, method: Method, tol: ToleranceConfig) -> ConstantValue:
    label = f"pi_{n}"
    if method is Method.QUADRATURE:
        r = integrate_finite(_aux_integrand(n, 0.5), 0.0, 1.0, tol, with_complement=True)
        return ConstantValue(label, 2 * r.value, method, 2 * r.error_estimate)
    if method is Method.BETA:
        from .gammafn import gamma_reference_result

        g_half = gamma_reference_result(0.5, tol)
        g_inv = gamma_reference_result(1.0 / n, tol)
        g_sum = gamma_reference_result(0.5 + 1.0 / n, tol)
        value = 2.0 / n * g_half.value * g_inv.value / g_sum.value
        rel = sum(g.error_estimate / g.value for g in (g_half, g_inv, g_sum))
        return ConstantValue(label, value, method, value * rel)
    if method is Method.SERIES:
        terms = min(tol.max_terms, 4000)
        half, err = _series_half_pi_n(n, max(terms, 200))
        return ConstantValue(label, 2 * half, method, 2 * err)
    raise ValueError(f"unknown method {method!r}")


def pi_n(n: int, method: Method = Method.BETA, tol: Optional[ToleranceConfig] = None) -> ConstantValue:
    """The n-th hyperelliptic constant. Results are memoized per (n, method, tol)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _pi_n_cached(int(n), Method(method), tol or DEFAULT_TOL)


def q_n(n: int, tol: Optional[ToleranceConfig] = None, method: Method = Method.BETA) -> float:
    """Quarter-length pi_n / 2 of the curve |x|^n + |y|^n = 1."""
    return pi_n(n, method, tol).value / 2


@lru_cache(maxsize=4096)
def _pi_aux_cached(l: int, n: int, k: int, method: Method, tol: ToleranceConfig) -> ConstantValue:
    label = f"pi_{l},{n},{k}"
    if method is Method.QUADRATURE:
        r = integrate_finite(_aux_integrand(n, k / l), 0.0, 1.0, tol, with_complement=True)
        return ConstantValue(label, 2 * r.value, method, 2 * r.error_estimate)
    if method is Method.BETA:
        from .gammafn import gamma_reference_result

        a, b = 1.0 / n, (l - k) / l
        ga, gb, gab = (gamma_reference_result(x, tol) for x in (a, b, a + b))
        value = 2.0 * ga.value * gb.value / (n * gab.value)
        rel = sum(g.error_estimate / g.value for g in (ga, gb, gab))
        return ConstantValue(label, value, method, value * rel)
    raise ValueError(f"method {method.value!r} is not available for auxiliary constants")


def pi_aux(
    l: int, n: int, k: int, method: Method = Method.BETA, tol: Optional[ToleranceConfig] = None
) -> ConstantValue:
    """Auxiliary constant pi_{l,n,k} for l >= 2, 1 <= k <= l-1, n >= 1."""
    if l < 2 or n < 1 or not 1 <= k <= l - 1:
        raise ValueError(f"invalid auxiliary index (l={l}, n={n}, k={k})")
    return _pi_aux_cached(int(l), int(n), int(k), Method(method), tol or DEFAULT_TOL)


def lemniscate_constant(tol: Optional[ToleranceConfig] = None, method: Method = Method.BETA) -> float:
    return pi_n(4, method, tol).value


def moment_integral(n: int, tol: Optional[ToleranceConfig] = None) -> float:
    """int_0^1 t^n / sqrt(1 - t^(2n)) dt."""

    def f(t, da, db):
        return t**n / math.sqrt(one_minus_power(2 * n, t, db))

    return integrate_finite(f, 0.0, 1.0, tol, with_complement=True).value


def method_agreement(
    n_values, tol_rel: float = 1e-11, tol: Optional[ToleranceConfig] = None
) -> List[IdentityResidual]:
    """Pairwise agreement of the three pi_n routes."""
    out = []
    pairs = ((Method.QUADRATURE, Method.BETA), (Method.QUADRATURE, Method.SERIES), (Method.BETA, Method.SERIES))
    for n in n_values:
        vals = {m: pi_n(n, m, tol).value for m in Method}
        for m1, m2 in pairs:
            out.append(residual(f"pi_n.{m1.value}_vs_{m2.value}[n={n}]", vals[m1], vals[m2], tol_rel=tol_rel))
    return out


def check_constant_relations(
    n_max: int = 16,
    tol_abs: float = 1e-11,
    tol_rel: float = 1e-11,
    tol: Optional[ToleranceConfig] = None,
) -> List[IdentityResidual]:
    """Relations between hyperelliptic and auxiliary constants.

    All constants here come from quadrature, so none of the residuals depends
    on a Gamma evaluation.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    Q = Method.QUADRATURE
    out = []
    for n in range(1, n_max // 2 + 1):
        lhs = pi_n(2 * n, Q, tol).value
        rhs = pi_aux(2 * n, 2 * n, 2 * n - 1, Q, tol).value / 2 ** (1 - 1 / n)
        out.append(residual(f"halving_aux[n={n}]", lhs, rhs, tol_abs, tol_rel))

    p3, p6 = pi_n(3, Q, tol).value, pi_n(6, Q, tol).value
    out.append(residual("pi_6_from_pi_3", p6, math.sqrt(3) * p3 / 2, tol_abs, tol_rel))

    prev = q_n(2, tol, Q)
    for n in range(3, n_max + 1):
        q = q_n(n, tol, Q)
        out.append(bound(f"q_n_decreasing[n={n}]", q, prev))
        out.append(bound(f"q_n_above_one[n={n}]", 1.0, q))
        prev = q

    for n in range(1, n_max // 2 + 1):
        lhs = moment_integral(n, tol)
        rhs = pi_n(2, Q, tol).value / (n * pi_n(2 * n, Q, tol).value)
        out.append(residual(f"moment_integral[n={n}]", lhs, rhs, tol_abs, tol_rel))

    # n = 2: the lemniscate arc integrals multiply to pi/4
    a = pi_n(4, Q, tol).value / 2
    out.append(residual("elastica_quarter_pi", a * moment_integral(2, tol), math.pi / 4, tol_abs, tol_rel))
    return out


def curva_elastica_products(
    n_values, tol_abs: float = 1e-11, tol_rel: float = 1e-11, tol: Optional[ToleranceConfig] = None
) -> List[IdentityResidual]:
    """(int (1-t^2n)^-1/2)(int t^n (1-t^2n)^-1/2) = pi/(2n); n = 2 is A*B = pi/4."""
    out = []
    for n in n_values:
        a = pi_n(2 * n, Method.QUADRATURE, tol).value / 2
        b = moment_integral(n, tol)
        out.append(residual(f"elastica_product[n={n}]", a * b, math.pi / (2 * n), tol_abs, tol_rel))
    return out
