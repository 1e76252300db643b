"""Applications of the hyperelliptic constants: complete elliptic integrals
and their singular values, AGM limits, superellipse areas, zeta ratios and
two polygamma identities.

Independent oracles used here (Catalan's constant, zeta(3), Euler's gamma,
zeta on (0, 1)) are computed in place from convergent series, so every
number in a report can be reproduced from this code alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional

from .constants import Method, _hurwitz_zeta_large, one_minus_power, pi_n
from .errors import DomainError
from .gammafn import euler_gamma, gamma_deriv, gamma_reference
from .numkernel import DEFAULT_TOL, ToleranceConfig, agm, integrate_finite
from .residuals import IdentityResidual, bound, residual

SQ2, SQ3 = math.sqrt(2.0), math.sqrt(3.0)


def _pi(n: int, tol) -> float:
    return pi_n(n, Method.QUADRATURE, tol).value


# --------------------------------------------------------------------------
# elliptic integral


def elliptic_K(k: float, tol: Optional[ToleranceConfig] = None) -> float:
    """Complete elliptic integral of the first kind, K(k) = pi / (2 AGM(1, k'))."""
    if not 0 <= k < 1:
        raise DomainError(f"modulus must lie in [0, 1), got {k}")
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    return math.pi / (2.0 * agm(1.0, kp, tol))


def elliptic_K_quadrature(k: float, tol: Optional[ToleranceConfig] = None) -> float:
    """K(k) = int_0^1 dt / sqrt((1 - t^2)(1 - k^2 t^2)) by tanh-sinh."""
    if not 0 <= k < 1:
        raise DomainError(f"modulus must lie in [0, 1), got {k}")

    def f(t, da, db):
        return 1.0 / math.sqrt(db * (1.0 + t) * (1.0 - (k * t) ** 2))

    return integrate_finite(f, 0.0, 1.0, tol, with_complement=True).value


@dataclass(frozen=True)
class SingularValueCase:
    n: int
    modulus: float
    rhs: float
    modulus_closed_form: str
    rhs_closed_form: str

    def __post_init__(self):
        if not 0 < self.modulus < 1:
            raise DomainError(f"modulus {self.modulus} outside (0, 1)")


SINGULAR_VALUE_N = (1, 3, 4, 9, 16, 25)


def singular_value_cases(tol: Optional[ToleranceConfig] = None) -> List[SingularValueCase]:
    """The six moduli lambda*(n) with closed forms for K(lambda*(n))."""
    w, p3 = _pi(4, tol), _pi(3, tol)
    r4 = lambda x: x**0.25  # noqa: E731
    return [
        SingularValueCase(1, 1 / SQ2, w / SQ2, "1/sqrt(2)", "varpi/sqrt(2)"),
        SingularValueCase(3, (math.sqrt(6) - SQ2) / 4, math.sqrt(3 * SQ3) * p3 / 4,
                          "(sqrt(6)-sqrt(2))/4", "sqrt(3 sqrt(3)) pi_3/4"),
        SingularValueCase(4, (SQ2 - 1) ** 2, w / math.sqrt(8) + w / 4, "(sqrt(2)-1)^2", "varpi/sqrt(8) + varpi/4"),
        SingularValueCase(9, (SQ3 - 1) * (SQ2 - r4(3)) / 2, math.sqrt(SQ3 / 9 + 1 / 6) * w,
                          "(sqrt(3)-1)(sqrt(2)-3^(1/4))/2", "sqrt(sqrt(3)/9 + 1/6) varpi"),
        SingularValueCase(16, (SQ2 + 1) ** 2 * (r4(2) - 1) ** 4, (r4(2) + 1) ** 2 * w / 8,
                          "(sqrt(2)+1)^2 (2^(1/4)-1)^4", "(2^(1/4)+1)^2 varpi/8"),
        SingularValueCase(25, (math.sqrt(10) - 2 * SQ2) * (3 - 2 * r4(5)) / 2, SQ2 / 5 * w + w / math.sqrt(10),
                          "(sqrt(10)-2 sqrt(2))(3-2*5^(1/4))/2", "sqrt(2)/5 varpi + varpi/sqrt(10)"),
    ]


def singular_value_suite(
    tol: Optional[ToleranceConfig] = None, tol_abs: float = 1e-11, tol_rel: float = 1e-11
) -> List[IdentityResidual]:
    """K(lambda*(n)) against its closed form, and AGM(1, lambda*(1/n)) = pi/(2K(lambda*(n)))."""
    out = []
    for case in singular_value_cases(tol):
        K = elliptic_K(case.modulus, tol)
        out.append(residual(f"singular_value[n={case.n}]", K, case.rhs, tol_abs, tol_rel))
        # lambda*(1/n) from the complementary relation
        comp = math.sqrt((1.0 - case.modulus) * (1.0 + case.modulus))
        out.append(residual(f"agm_singular[n={case.n}]", agm(1.0, comp, tol), math.pi / (2 * case.rhs), tol_abs, tol_rel))
    return out


def agm_identity_suite(
    tol: Optional[ToleranceConfig] = None, tol_abs: float = 1e-12, tol_rel: float = 1e-12
) -> List[IdentityResidual]:
    p2, p3, w, p6 = _pi(2, tol), _pi(3, tol), _pi(4, tol), _pi(6, tol)
    a = math.sqrt(2 + SQ3)
    return [
        residual("agm[1,sqrt2]", agm(1.0, SQ2, tol), p2 / w, tol_abs, tol_rel),
        residual("agm[2,sqrt(2+sqrt3)]", agm(2.0, a, tol), 4 * p2 / (27**0.25 * p3), tol_abs, tol_rel),
        residual(
            "agm[1+sqrt3,sqrt8]",
            agm(1 + SQ3, math.sqrt(8), tol),
            2 ** (27 / 12) * p2 / (3 * 4 * p6**3 * SQ3 * p3) ** 0.25,
            tol_abs,
            tol_rel,
        ),
        residual("agm.homogeneity", agm(2.0, a, tol), 2 * agm(1.0, a / 2, tol), tol_abs, tol_rel),
    ]


def elliptic_checks(tol: Optional[ToleranceConfig] = None) -> List[IdentityResidual]:
    k = 1 / SQ2
    out = [
        residual("elliptic_K.agm_vs_quadrature[k=1/sqrt2]", elliptic_K(k, tol), elliptic_K_quadrature(k, tol), 1e-11, 1e-11),
        residual("elliptic_K.zero", elliptic_K(0.0, tol), math.pi / 2, 1e-13, 0.0),
    ]
    prev = elliptic_K(0.0, tol)
    for i in range(1, 12):
        k = 0.09 * i
        cur = elliptic_K(k, tol)
        out.append(bound(f"elliptic_K.increasing[k={k:.2f}]", prev, cur))
        prev = cur
    return out


# --------------------------------------------------------------------------
# superellipse


@dataclass(frozen=True)
class SuperellipseSpec:
    n: int
    a: float = 1.0
    b: float = 1.0

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        if not (self.a > 0 and self.b > 0):
            raise DomainError(f"semi-axes must be positive, got a={self.a}, b={self.b}")


def superellipse_area(spec: SuperellipseSpec, tol: Optional[ToleranceConfig] = None) -> float:
    """Area inside |x/a|^n + |y/b|^n = 1: (2ab/n) Gamma(1/n)^2 / Gamma(2/n)."""
    n = spec.n
    g1, g2 = gamma_reference(1 / n, tol), gamma_reference(2 / n, tol)
    return 2 * spec.a * spec.b / n * g1 * g1 / g2


def superellipse_area_radical(spec: SuperellipseSpec, tol: Optional[ToleranceConfig] = None) -> float:
    """pi_n ab sqrt(2 sqrt(2 ...)) with nu-1 radicals, for n = 2^nu."""
    n = spec.n
    nu = n.bit_length() - 1
    if n != 1 << nu or nu < 1:
        raise DomainError(f"radical form needs n = 2^nu with nu >= 1, got {n}")
    factor = 1.0
    for _ in range(nu - 1):
        factor = math.sqrt(2 * factor)
    return _pi(n, tol) * spec.a * spec.b * factor


def superellipse_area_quadrature(spec: SuperellipseSpec, tol: Optional[ToleranceConfig] = None) -> float:
    """4ab int_0^1 (1 - t^n)^(1/n) dt."""
    n = spec.n
    r = integrate_finite(lambda t, da, db: one_minus_power(n, t, db) ** (1 / n), 0.0, 1.0, tol, with_complement=True)
    return 4 * spec.a * spec.b * r.value


def superellipse_residuals(
    nu_values=range(1, 6), tol_rel: float = 1e-11, tol: Optional[ToleranceConfig] = None
) -> List[IdentityResidual]:
    out = []
    for nu in nu_values:
        s = SuperellipseSpec(2**nu, 1.5, 0.75)
        g = superellipse_area(s, tol)
        out.append(residual(f"superellipse.gamma_vs_radical[nu={nu}]", g, superellipse_area_radical(s, tol), 0.0, tol_rel))
        out.append(residual(f"superellipse.gamma_vs_quadrature[nu={nu}]", g, superellipse_area_quadrature(s, tol), 0.0, tol_rel))
    prev = superellipse_area(SuperellipseSpec(1), tol)
    for n in (2, 4, 8, 16, 32):
        cur = superellipse_area(SuperellipseSpec(n), tol)
        out.append(bound(f"superellipse.increasing[n={n}]", prev, cur))
        out.append(bound(f"superellipse.below_square[n={n}]", cur, 4.0))
        prev = cur
    return out


# --------------------------------------------------------------------------
# zeta, eta and friends


def alternating_sum(a, terms: int = 40) -> float:
    """sum_{k>=0} (-1)^k a(k) for a totally monotone sequence a.

    Cohen, Rodriguez Villegas and Zagier, algorithm 1; the error decays like
    5.8^-terms.
    """
    d = (3 + math.sqrt(8)) ** terms
    d = (d + 1 / d) / 2
    b, c, s = -1.0, -d, 0.0
    for k in range(terms):
        c = b - c
        s += c * a(k)
        b *= (k + terms) * (k - terms) / ((k + 0.5) * (k + 1))
    return s / d


def dirichlet_eta(s: float) -> float:
    return alternating_sum(lambda k: (k + 1.0) ** -s)


def zeta(s: float) -> float:
    """Riemann zeta for real s > 0, s != 1, through eta(s) = (1 - 2^(1-s)) zeta(s)."""
    if not s > 0 or s == 1:
        raise DomainError(f"zeta implemented for s > 0, s != 1; got {s}")
    return dirichlet_eta(s) / -math.expm1((1 - s) * math.log(2))


def catalan_constant() -> float:
    return alternating_sum(lambda k: 1.0 / (2 * k + 1) ** 2)


def zeta3_oracle(head_terms: int = 200) -> float:
    """sum 1/k^3: direct head plus an Euler-Maclaurin tail."""
    head = math.fsum(1.0 / k**3 for k in range(1, head_terms))
    return head + _hurwitz_zeta_large(3.0, float(head_terms))


def euler_gamma_oracle(m: int = 1_000_000) -> float:
    """H_m - ln m - 1/(2m) + 1/(12 m^2)."""
    h = math.fsum(1.0 / j for j in range(1, m + 1))
    return h - math.log(m) - 1 / (2 * m) + 1 / (12 * m * m)


def _nested_two(n: int) -> float:
    """sqrt(2 + sqrt(2 + ...)) with n radicals."""
    v = 0.0
    for _ in range(n):
        v = math.sqrt(2 + v)
    return v


def zeta_ratio_rhs(n: int, tol: Optional[ToleranceConfig] = None, reduced: bool = False) -> float:
    """Closed form of zeta(1 - 2^-n) / zeta(2^-n) in hyperelliptic constants.

    The default form nests 2^(n-1) pi_(2^j) for j = n..1 under the radicals and
    divides by (2 pi)^(2^-n). With ``reduced=True`` (n >= 2) the innermost
    level is absorbed, leaving 2^(n-1) pi_4 sqrt(2^(n-2)) at the bottom.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    c = 2.0 ** (n - 1)
    if reduced:
        if n < 2:
            raise DomainError("reduced form needs n >= 2")
        v = math.sqrt(2.0 ** (n - 2))
        for j in range(2, n + 1):
            v = math.sqrt(c * _pi(2**j, tol) * v)
        return _nested_two(n) * v
    v = math.sqrt(c * _pi(2, tol))
    for j in range(2, n + 1):
        v = math.sqrt(c * _pi(2**j, tol) * v)
    return _nested_two(n) * v / (2 * _pi(2, tol)) ** (2.0**-n)


def zeta_ratio_check(n: int, tol: Optional[ToleranceConfig] = None, tol_abs: float = 1e-9, reduced: bool = False) -> IdentityResidual:
    s = 1 - 2.0**-n
    lhs = zeta(s) / zeta(1 - s)
    tag = "reduced" if reduced else "nested"
    return residual(f"zeta_ratio.{tag}[n={n}]", lhs, zeta_ratio_rhs(n, tol, reduced), tol_abs, 0.0)


def zeta_ratio_reflection(n: int, tol: Optional[ToleranceConfig] = None, tol_abs: float = 1e-9) -> IdentityResidual:
    """The same ratio from the functional equation with the reference Gamma."""
    s = 1 - 2.0**-n
    lhs = zeta(s) / zeta(1 - s)
    rhs = 2**s * math.pi ** (s - 1) * math.sin(math.pi * s / 2) * gamma_reference(1 - s, tol)
    return residual(f"zeta_ratio.functional_equation[n={n}]", lhs, rhs, tol_abs, 0.0)


def zeta_ratio_suite(tol: Optional[ToleranceConfig] = None, tol_abs: float = 1e-9) -> List[IdentityResidual]:
    out = []
    for n in (1, 2, 3):
        out.append(zeta_ratio_check(n, tol, tol_abs))
        out.append(zeta_ratio_reflection(n, tol, tol_abs))
        if n >= 2:
            out.append(zeta_ratio_check(n, tol, tol_abs, reduced=True))
    # the printed instance at s = 3/4
    w = _pi(4, tol)
    out.append(residual("zeta_ratio[s=3/4]", zeta(0.75) / zeta(0.25), math.sqrt((2 + SQ2) * 2 * w), tol_abs, 0.0))
    return out


def polygamma_identity_checks(
    tol: Optional[ToleranceConfig] = None, tol_abs: float = 1e-7, gamma_tol: float = 1e-9
) -> List[IdentityResidual]:
    """beta(2) and zeta(3) through Gamma derivatives, and Euler's gamma as -Gamma'(1)."""
    pi, w = _pi(2, tol), _pi(4, tol)
    g = euler_gamma(tol)
    root = math.sqrt(2 * pi)
    beta2 = (
        gamma_deriv(2, 0.25, tol) / 16 / math.sqrt(2 * w * root)
        - gamma_deriv(2, 0.75, tol) / 16 * math.sqrt(w * root) / pi
        - pi / 8 * (g + 3 * math.log(2))
    )
    zeta3 = -0.5 * gamma_deriv(3, 1.0, tol) - g * pi**2 / 4 - 0.5 * g**3
    return [
        residual("polygamma.catalan", catalan_constant(), beta2, tol_abs, 0.0),
        residual("polygamma.zeta3", zeta3_oracle(), zeta3, tol_abs, 0.0),
        residual("polygamma.euler_gamma", euler_gamma_oracle(), g, gamma_tol, 0.0),
    ]
