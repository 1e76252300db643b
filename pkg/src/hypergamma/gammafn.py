"""Gamma function from Gauss's real-line integral, its parameter derivatives,
and closed forms for Gamma at rational arguments built from hyperelliptic
constants.

The reference value is

    Gamma(s) = int_{-inf}^{inf} exp(s x - e^x) dx,          s > 0,

and differentiating under the integral sign gives the moments
``Gamma^(n)(s) = int x^n exp(s x - e^x) dx``. Closed forms use quadrature
values of pi_n, so a closed form and the reference share no code path.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Optional, Union

from .constants import Method, pi_aux, pi_n
from .errors import AccuracyWarning, DomainError
from .numkernel import DEFAULT_TOL, QuadratureResult, ToleranceConfig, integrate_finite, integrate_real_line
from .residuals import IdentityResidual, bound, residual

SMALL_S = 0.05
MAX_DERIVATIVE_ORDER = 6


class Route(str, enum.Enum):
    GAUSS_INTEGRAL = "gauss_integral"
    CLOSED_FORM = "closed_form"
    REFLECTION = "reflection"
    DUPLICATION = "duplication"


@dataclass(frozen=True)
class GammaValue:
    arg: Union[Fraction, float]
    value: float
    route: Route
    residual_vs_reference: float


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` (or an integer) into a reduced positive fraction.

    Decimal notation is refused: closed forms are statements about rationals.
    """
    text = text.strip()
    if any(c in text for c in ".eE"):
        raise ValueError(f"expected p/q, got decimal {text!r}")
    value = Fraction(text)
    if value <= 0:
        raise ValueError(f"argument must be positive, got {text!r}")
    return value


def _gauss_integrand(s: float, order: int):
    def f(x):
        if x > 700.0:
            return 0.0
        v = math.exp(s * x - math.exp(x))
        if order == 0 or v == 0.0:
            return v
        return x**order * v

    return f


@lru_cache(maxsize=8192)
def _moment(order: int, s: float, tol: ToleranceConfig) -> QuadratureResult:
    return integrate_real_line(_gauss_integrand(s, order), tol)


def gamma_reference_result(s: float, tol: Optional[ToleranceConfig] = None) -> QuadratureResult:
    """Gamma(s) for real s > 0 with the quadrature error estimate."""
    tol = tol or DEFAULT_TOL
    s = float(s)
    if not s > 0:
        raise DomainError(f"Gamma reference needs s > 0, got {s}")
    if s < SMALL_S:
        # the left tail of the integrand flattens as s -> 0
        r = _moment(0, s + 1.0, tol)
        return QuadratureResult(r.value / s, r.error_estimate / s, r.evaluations)
    return _moment(0, s, tol)


def gamma_reference(s: float, tol: Optional[ToleranceConfig] = None) -> float:
    return gamma_reference_result(s, tol).value


def gamma_deriv(order: int, s: float, tol: Optional[ToleranceConfig] = None) -> float:
    """n-th derivative of Gamma at s > 0 as a moment of the Gauss integrand.

    Accuracy degrades with the order because x^n amplifies the tails:
    roughly 1e-12 for order 0 down to 1e-9 from order 4 on.
    """
    if order < 0 or order > MAX_DERIVATIVE_ORDER:
        raise DomainError(f"derivative order must be in 0..{MAX_DERIVATIVE_ORDER}, got {order}")
    if not s > 0:
        raise DomainError(f"need s > 0, got {s}")
    if order > 4:
        warnings.warn(f"Gamma^({order}) is accurate only to about 1e-9", AccuracyWarning, stacklevel=2)
    if order == 0:
        return gamma_reference(s, tol)
    return _moment(order, float(s), tol or DEFAULT_TOL).value


def euler_gamma(tol: Optional[ToleranceConfig] = None) -> float:
    """Euler-Mascheroni constant as -Gamma'(1)."""
    return -gamma_deriv(1, 1.0, tol)


# --------------------------------------------------------------------------
# closed forms at rational arguments


def _pi(n: int, tol) -> float:
    return pi_n(n, Method.QUADRATURE, tol).value


def dyadic_product(n: int, tol: Optional[ToleranceConfig] = None) -> float:
    """Gamma(1/2^n) as prod_k (2^(n-1) pi_{2^k})^(1/2^(n-k+1))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    logs = [(math.log(2.0 ** (n - 1) * _pi(2**k, tol))) / 2 ** (n - k + 1) for k in range(1, n + 1)]
    return math.exp(math.fsum(logs))


def dyadic_recursion(n: int, tol: Optional[ToleranceConfig] = None) -> float:
    """Gamma(1/2^n) by repeated halving, Gamma(1/2m) = sqrt(pi_2m Gamma(1/m) 2m / 2^(1/m))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    g = 1.0
    for j in range(1, n + 1):
        m = 2 ** (j - 1)
        g = math.sqrt(_pi(2 * m, tol) * g * 2 * m / 2 ** (1 / m))
    return g


def _certify(arg, value, route, tol) -> GammaValue:
    ref = gamma_reference(float(arg), tol)
    return GammaValue(arg, value, route, abs(value - ref) / ref)


def gamma_dyadic(n: int, tol: Optional[ToleranceConfig] = None) -> GammaValue:
    return _certify(Fraction(1, 2**n), dyadic_product(n, tol), Route.CLOSED_FORM, tol)


def nested_sine_radical(n: int) -> float:
    """2 sin(pi/2^n) = sqrt(2 - sqrt(2 + sqrt(2 + ...))) with n-1 square roots."""
    if n < 2:
        raise ValueError("n must be >= 2")
    inner = 0.0
    for _ in range(n - 2):
        inner = math.sqrt(2.0 + inner)
    return math.sqrt(2.0 - inner)


def nested_cosine_radical(n: int) -> float:
    """2 cos(pi/2^(n+1)) = sqrt(2 + sqrt(2 + ...)) with n square roots."""
    v = 0.0
    for _ in range(n):
        v = math.sqrt(2.0 + v)
    return v


SPECIAL_TAGS = (
    "three_quarters",
    "one_third",
    "one_sixth",
    "one_sixth_duplication",
    "shifted_reciprocal",
    "half_shift_ratio",
    "dyadic_half_shift",
    "dyadic_reflection",
    "division",
)


def gamma_special(tag: str, tol: Optional[ToleranceConfig] = None, **params) -> GammaValue:
    """Closed-form Gamma value selected by `tag`, certified against the reference.

    Tags and parameters:

    ``three_quarters``          Gamma(3/4) = pi / sqrt(w sqrt(2 pi)), w = pi_4
    ``one_third``               Gamma(1/3) = cbrt(sqrt3 pi_3 pi_2 cbrt2)
    ``one_sixth``               Gamma(1/6) from pi_6, pi_3, pi_2 by halving
    ``one_sixth_duplication``   Gamma(1/6) = 2^(-1/3) sqrt(3/pi) Gamma(1/3)^2
    ``shifted_reciprocal`` n    Gamma((2+n)/2n) = Gamma(1/n) 2 sqrt(pi) / (n pi_n)
    ``half_shift_ratio`` k      Gamma((k+1)/2k) = Gamma(1 + 1/2k) 2 sqrt(pi_2) / pi_2k
    ``dyadic_half_shift`` n     Gamma((2^(n-1)+1)/2^n) = sqrt(pi_2) Gamma(1/2^n) / (2^(n-1) pi_2^n)
    ``dyadic_reflection`` n     Gamma((2^n-1)/2^n) via reflection with a nested sine radical
    ``division`` l, n, k        Gamma(1/(l n)) from pi_{l,ln,l-k} and Gamma at shifted arguments

    Where a right-hand side needs Gamma at another argument that has no
    closed form here, the reference value is used there.
    """
    tol = tol or DEFAULT_TOL
    p = lambda m: _pi(m, tol)  # noqa: E731
    ref = lambda x: gamma_reference(x, tol)  # noqa: E731

    if tag == "three_quarters":
        w = p(4)
        return _certify(Fraction(3, 4), p(2) / math.sqrt(w * math.sqrt(2 * p(2))), Route.CLOSED_FORM, tol)
    if tag == "one_third":
        v = (math.sqrt(3) * p(3) * p(2) * 2 ** (1 / 3)) ** (1 / 3)
        return _certify(Fraction(1, 3), v, Route.CLOSED_FORM, tol)
    if tag == "one_sixth":
        inner = (4 * 2 ** (1 / 3) * math.sqrt(3) * p(2) * p(3)) ** (1 / 3)
        return _certify(Fraction(1, 6), math.sqrt(p(6) * 3 * inner), Route.CLOSED_FORM, tol)
    if tag == "one_sixth_duplication":
        g3 = gamma_special("one_third", tol).value
        v = 2 ** (-1 / 3) * math.sqrt(3 / p(2)) * g3**2
        return _certify(Fraction(1, 6), v, Route.CLOSED_FORM, tol)
    if tag == "shifted_reciprocal":
        n = params["n"]
        v = ref(1 / n) * 2 * math.sqrt(p(2)) / (n * p(n))
        return _certify(Fraction(2 + n, 2 * n), v, Route.CLOSED_FORM, tol)
    if tag == "half_shift_ratio":
        k = params["k"]
        g_next = ref(1 / (2 * k)) / (2 * k)
        v = g_next * 2 * math.sqrt(p(2)) / p(2 * k)
        return _certify(Fraction(k + 1, 2 * k), v, Route.CLOSED_FORM, tol)
    if tag == "dyadic_half_shift":
        n = params["n"]
        if n < 2:
            raise ValueError("n must be >= 2")
        v = math.sqrt(p(2)) / (2 ** (n - 1) * p(2**n)) * dyadic_product(n, tol)
        return _certify(Fraction(2 ** (n - 1) + 1, 2**n), v, Route.CLOSED_FORM, tol)
    if tag == "dyadic_reflection":
        n = params["n"]
        if n < 2:
            raise ValueError("n must be >= 2")
        v = 2 * p(2) / (dyadic_product(n, tol) * nested_sine_radical(n))
        return _certify(Fraction(2**n - 1, 2**n), v, Route.CLOSED_FORM, tol)
    if tag == "division":
        l, n, k = params["l"], params["n"], params["k"]
        if l < 2 or not 1 <= k <= l - 1 or n < 1:
            raise ValueError(f"invalid (l, n, k) = ({l}, {n}, {k})")
        ln = l * n
        prod = math.prod(ref(1 / ln + j / l) for j in range(1, l) if j != k)
        num = ref(1 / n) * ln * (2 * p(2)) ** ((l - 1) / 2) * l ** (0.5 - 1 / n)
        num *= pi_aux(l, ln, l - k, Method.QUADRATURE, tol).value
        v = math.sqrt(num / (ref(k / l) * 2 * prod))
        return _certify(Fraction(1, ln), v, Route.CLOSED_FORM, tol)
    raise ValueError(f"unknown closed-form tag {tag!r}")


def _log2_exact(q: int) -> Optional[int]:
    return q.bit_length() - 1 if q > 0 and q & (q - 1) == 0 else None


def closed_form(arg: Fraction, tol: Optional[ToleranceConfig] = None) -> Optional[GammaValue]:
    """Pick a closed form that applies at `arg`, or None."""
    p, q = arg.numerator, arg.denominator
    e = _log2_exact(q)
    if p == 1 and e is not None and e >= 1:
        return gamma_dyadic(e, tol)
    if arg == Fraction(3, 4):
        return gamma_special("three_quarters", tol)
    if arg == Fraction(1, 3):
        return gamma_special("one_third", tol)
    if arg == Fraction(1, 6):
        return gamma_special("one_sixth", tol)
    if e is not None and e >= 2 and p == q - 1:
        return gamma_special("dyadic_reflection", tol, n=e)
    if e is not None and e >= 2 and p == q // 2 + 1:
        return gamma_special("dyadic_half_shift", tol, n=e)
    # (k+1)/(2k) appears reduced either with an even or an odd denominator
    if q % 2 == 0 and p == q // 2 + 1:
        return gamma_special("half_shift_ratio", tol, k=q // 2)
    if q % 2 == 1 and q > 1 and 2 * p == q + 1:
        return gamma_special("half_shift_ratio", tol, k=q)
    # (2+n)/(2n) with n odd; even n is covered by the previous case
    if q % 2 == 0 and p == q // 2 + 2:
        return gamma_special("shifted_reciprocal", tol, n=q // 2)
    return None


def gamma_reflection(x: float, tol: Optional[ToleranceConfig] = None) -> float:
    """Gamma(x) = pi / (sin(pi x) Gamma(1 - x)) for 0 < x < 1."""
    if not 0 < x < 1:
        raise DomainError(f"reflection route needs 0 < x < 1, got {x}")
    return math.pi / (math.sin(math.pi * x) * gamma_reference(1 - x, tol))


def gamma_duplication(x: float, tol: Optional[ToleranceConfig] = None) -> float:
    """Gamma(x) = sqrt(pi) 2^(1-2x) Gamma(2x) / Gamma(x + 1/2)."""
    return math.sqrt(math.pi) * 2 ** (1 - 2 * x) * gamma_reference(2 * x, tol) / gamma_reference(x + 0.5, tol)


# --------------------------------------------------------------------------
# residual suites


DEFAULT_X_GRID = (0.1, 0.25, 1 / 3, 0.5, 0.7, 1.0, 1.5, 2.3, 3.7, 5.0)


def halving_residuals(n_values: Iterable[int], tol_abs=1e-11, tol_rel=1e-11, tol=None) -> List[IdentityResidual]:
    """Gamma(1/n)^2 2^(2/n-1) / (Gamma(2/n) n) = pi_n / 2."""
    out = []
    for n in n_values:
        g1, g2 = gamma_reference(1 / n, tol), gamma_reference(2 / n, tol)
        lhs = g1 * g1 * 2 ** (2 / n - 1) / (g2 * n)
        out.append(residual(f"halving[n={n}]", lhs, _pi(n, tol) / 2, tol_abs, tol_rel))
    return out


def _beta_quadrature(w: float, z: float, tol) -> float:
    def f(t, da, db):
        return da ** (w - 1) * db ** (z - 1)

    return integrate_finite(f, 0.0, 1.0, tol, with_complement=True).value


def verify_classical(
    n_list: Iterable[int] = range(2, 9),
    x_list: Iterable[float] = DEFAULT_X_GRID,
    tol_rel: float = 1e-10,
    tol: Optional[ToleranceConfig] = None,
) -> List[IdentityResidual]:
    """Duplication, multiplication, Beta-Gamma, reflection and halving on grids."""
    n_list, x_list = list(n_list), list(x_list)
    if any(not 0 < x <= 10 for x in x_list):
        raise ValueError("x_list must lie in (0, 10]")
    g = lambda s: gamma_reference(s, tol)  # noqa: E731
    out = []
    for x in x_list:
        out.append(
            residual(
                f"duplication[x={x:.6g}]",
                g(x) * g(x + 0.5),
                math.sqrt(math.pi) / 2 ** (2 * x - 1) * g(2 * x),
                tol_rel=tol_rel,
            )
        )
        for n in n_list:
            lhs = math.prod(g(x + j / n) for j in range(n))
            rhs = (2 * math.pi) ** ((n - 1) / 2) / n ** (n * x - 0.5) * g(n * x)
            out.append(residual(f"multiplication[n={n},x={x:.6g}]", lhs, rhs, tol_rel=tol_rel))
        if x < 1:
            out.append(
                residual(
                    f"reflection[x={x:.6g}]",
                    g(x) * g(1 - x),
                    math.pi / math.sin(math.pi * x),
                    tol_rel=tol_rel,
                )
            )
    for w in x_list:
        for z in x_list:
            if z < w:
                continue
            out.append(
                residual(
                    f"beta_gamma[w={w:.6g},z={z:.6g}]",
                    _beta_quadrature(w, z, tol),
                    g(w) * g(z) / g(w + z),
                    tol_rel=tol_rel,
                )
            )
    out.extend(halving_residuals([n for n in n_list if n >= 2], tol_rel, tol_rel, tol))
    return out


def functional_equation_residuals(points: Iterable[float], tol_rel=1e-11, tol=None) -> List[IdentityResidual]:
    out = []
    for s in points:
        out.append(
            residual(
                f"functional_equation[s={s:.6g}]",
                s * gamma_reference(s, tol),
                gamma_reference(s + 1, tol),
                tol_rel=tol_rel,
            )
        )
    return out


def dyadic_residuals(n_values: Iterable[int], tol_rel=1e-10, tol=None) -> List[IdentityResidual]:
    out = []
    for n in n_values:
        prod, rec = dyadic_product(n, tol), dyadic_recursion(n, tol)
        ref = gamma_reference(2.0**-n, tol)
        out.append(residual(f"dyadic.product_vs_recursion[n={n}]", prod, rec, tol_rel=tol_rel))
        out.append(residual(f"dyadic.product_vs_reference[n={n}]", prod, ref, tol_rel=tol_rel))
        out.append(residual(f"dyadic.recursion_vs_reference[n={n}]", rec, ref, tol_rel=tol_rel))
    return out


def _special_residual(name, gv: GammaValue, tol_rel, tol) -> IdentityResidual:
    return residual(name, gv.value, gamma_reference(float(gv.arg), tol), tol_rel=tol_rel)


def closed_form_residuals(tol_rel=1e-10, tol=None) -> List[IdentityResidual]:
    """Every closed form on its certification grid."""
    out = []
    for tag in ("one_third", "three_quarters", "one_sixth", "one_sixth_duplication"):
        out.append(_special_residual(f"closed.{tag}", gamma_special(tag, tol), tol_rel, tol))
    for k in range(1, 9):
        out.append(_special_residual(f"closed.half_shift_ratio[k={k}]", gamma_special("half_shift_ratio", tol, k=k), tol_rel, tol))
    for n in (2, 3, 4):
        out.append(_special_residual(f"closed.dyadic_half_shift[n={n}]", gamma_special("dyadic_half_shift", tol, n=n), tol_rel, tol))
        out.append(_special_residual(f"closed.dyadic_reflection[n={n}]", gamma_special("dyadic_reflection", tol, n=n), tol_rel, tol))
        out.append(
            residual(
                f"closed.nested_sine_radical[n={n}]",
                nested_sine_radical(n),
                2 * math.sin(math.pi / 2**n),
                tol_abs=1e-15,
                tol_rel=1e-14,
            )
        )
    for n in range(2, 9):
        out.append(_special_residual(f"closed.shifted_reciprocal[n={n}]", gamma_special("shifted_reciprocal", tol, n=n), tol_rel, tol))
    for l in (2, 3, 4):
        for n in (1, 2, 3):
            for k in range(1, l):
                gv = gamma_special("division", tol, l=l, n=n, k=k)
                out.append(_special_residual(f"closed.division[l={l},n={n},k={k}]", gv, tol_rel, tol))
    return out


def auxiliary_residuals(l_max=8, n_max=8, tol_abs=1e-10, tol_rel=1e-10, tol=None) -> List[IdentityResidual]:
    """Gamma-product forms of the auxiliary constants against their quadratures."""
    g = lambda s: gamma_reference(s, tol)  # noqa: E731
    out = []
    for l in range(2, l_max + 1):
        for n in range(1, n_max + 1):
            for k in range(1, l):
                prod = math.prod(g(1 / n + j / l) for j in range(1, l) if j != k)
                lhs = l ** (l / n - 0.5) * g(1 / n) ** 2 * g(k / l) * prod
                lhs /= (2 * math.pi) ** ((l - 1) / 2) * g(l / n) * n
                rhs = pi_aux(l, n, l - k, Method.QUADRATURE, tol).value / 2
                out.append(residual(f"aux.gamma_product[l={l},n={n},k={k}]", lhs, rhs, tol_abs, tol_rel))
    for n in range(2, n_max + 1):
        lhs = g(1 / n) ** 2 / (g(2 / n) * n)
        rhs = pi_aux(n, n, n - 1, Method.QUADRATURE, tol).value / 2
        out.append(residual(f"aux.beta_diagonal[n={n}]", lhs, rhs, tol_abs, tol_rel))
    for n in range(1, l_max // 2 + 1):
        lhs = _pi(2 * n, tol)
        rhs = pi_aux(2 * n, 2 * n, 2 * n - 1, Method.QUADRATURE, tol).value / 2 ** (1 - 1 / n)
        out.append(residual(f"aux.halving[n={n}]", lhs, rhs, tol_abs, tol_rel))
    return out


def derivative_recurrence_residual(order: int, s: float, tol_abs=1e-9, tol_rel=1e-9, tol=None) -> IdentityResidual:
    """Gamma^(n)(s) + s/(n+1) Gamma^(n+1)(s) = Gamma^(n+1)(s+1)/(n+1)."""
    if order > 4:
        raise DomainError("recurrence is certified only up to order 4")
    n = order
    lhs = gamma_deriv(n, s, tol) + s / (n + 1) * gamma_deriv(n + 1, s, tol)
    rhs = gamma_deriv(n + 1, s + 1, tol) / (n + 1)
    return residual(f"derivative_recurrence[n={n},s={s:.6g}]", lhs, rhs, tol_abs, tol_rel)


@dataclass(frozen=True)
class SeriesEstimate:
    value: float
    remainder_bound: float


def shifted_derivative_series(s: float, N: int, tol: Optional[ToleranceConfig] = None, target: float = 1e-6) -> SeriesEstimate:
    """Partial sum  sum_{n<=N} (-1)^n Gamma^(n+1)(s+1) s^n/(n+1)!  and the size
    of the remainder ``Gamma^(N+1)(s) s^(N+1)/(N+1)!``.

    The remainder does not vanish as N grows: Gamma^(N+1)(s) is dominated by
    the pole at 0, so the remainder tends to 1/s and the full series sums to
    Gamma(s) - 1/s. An AccuracyWarning is issued when the remainder exceeds
    `target`, which for this reason is always the case for small s.
    """
    if not 0 < s <= 1:
        raise DomainError(f"need 0 < s <= 1, got {s}")
    if N < 0 or N + 1 > MAX_DERIVATIVE_ORDER:
        raise DomainError(f"N must be in 0..{MAX_DERIVATIVE_ORDER - 1}")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", AccuracyWarning)
        terms = [
            (-1) ** n * gamma_deriv(n + 1, s + 1, tol) * s**n / math.factorial(n + 1) for n in range(N + 1)
        ]
        rem = abs(gamma_deriv(N + 1, s, tol)) * s ** (N + 1) / math.factorial(N + 1)
    if rem > target:
        warnings.warn(f"remainder {rem:.3g} exceeds {target:g}", AccuracyWarning, stacklevel=2)
    return SeriesEstimate(math.fsum(terms), rem)


def shifted_series_residuals(s: float, N: int, tol=None) -> List[IdentityResidual]:
    """Partial sum against Gamma(s): inside the remainder bound, exact with the
    signed remainder, and offset by 1/s in the limit."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", AccuracyWarning)
        est = shifted_derivative_series(s, N, tol)
        signed = (-1) ** (N + 1) * gamma_deriv(N + 1, s, tol) * s ** (N + 1) / math.factorial(N + 1)
    g = gamma_reference(s, tol)
    tag = f"[s={s:.6g},N={N}]"
    note = f"remainder {est.remainder_bound:.3g} does not vanish"
    return [
        bound(f"derivative_series.within_remainder{tag}", abs(est.value - g), est.remainder_bound * (1 + 1e-8) + 1e-10, note),
        residual(f"derivative_series.with_remainder{tag}", est.value + signed, g, 1e-9, 1e-9),
        # the remainder's limit: sum_{n>=0} ... = Gamma(s) - 1/s
        residual(f"derivative_series.limit_offset{tag}", est.value + 1 / s, g, 1e-4 * s ** -1, 0.0),
    ]


def boundary_term_residual(order: int, s: float, tol_abs=1e-9, tol_rel=1e-9, tol=None) -> IdentityResidual:
    """n Gamma^(n-1)(s) + s Gamma^(n)(s) = Gamma^(n)(s+1); order 0 is s Gamma(s) = Gamma(s+1)."""
    if order < 0:
        raise DomainError("order must be >= 0")
    if order == 0:
        lhs = s * gamma_reference(s, tol)
        rhs = gamma_reference(s + 1, tol)
    else:
        lhs = order * gamma_deriv(order - 1, s, tol) + s * gamma_deriv(order, s, tol)
        rhs = gamma_deriv(order, s + 1, tol)
    return residual(f"boundary_term[n={order},s={s:.6g}]", lhs, rhs, tol_abs, tol_rel)


def derivative_integral_residual(order: int, s: float, tol_abs=1e-9, tol=None) -> IdentityResidual:
    """int d/dx [x^n exp(s x - e^x)] dx = 0, computed directly by quadrature."""

    def f(x):
        if x > 700.0:
            return 0.0
        v = math.exp(s * x - math.exp(x))
        if v == 0.0:
            return 0.0
        d = (s - math.exp(x)) * x**order
        if order:
            d += order * x ** (order - 1)
        return d * v

    val = integrate_real_line(f, tol).value
    return residual(f"boundary_integral[n={order},s={s:.6g}]", val, 0.0, tol_abs, 0.0)
