"""Hyperelliptic trigonometric functions.

For root order k >= 2 and power order n >= 1:

    arcs_{k,n}(x) = int_0^x (1 - t^n)^(-1/k) dt      (S)
    arcc_{k,n}(x) = int_x^1 (1 - t^n)^(-1/k) dt      (C)
    arsh_{k,n}(x) = int_0^x (1 + t^n)^(-1/k) dt      (SH)
    arch_{k,n}(x) = int_1^x (t^n - 1)^(-1/k) dt      (CH)

Their inverses s, c, sh, ch are obtained by monotone root finding on the real
line and by complex Newton iteration near the origin. ``e_function`` adds the
hyperbolic cosine and sine and generalizes exp; ``verify_rotation_identity``
certifies its rotation to the circular functions.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .constants import Method, pi_aux
from .errors import BranchError, DomainError, NonConvergence, OutOfImage
from .numkernel import DEFAULT_TOL, ToleranceConfig, find_root_monotone, integrate_finite, sum_arcs_series
from .residuals import IdentityResidual, residual

INF = math.inf


class Family(str, enum.Enum):
    S = "s"
    C = "c"
    SH = "sh"
    CH = "ch"


FAMILY_ALIASES = {
    "s": Family.S, "arcs": Family.S, "sin": Family.S,
    "c": Family.C, "arcc": Family.C, "cos": Family.C,
    "sh": Family.SH, "arsh": Family.SH, "sinh": Family.SH,
    "ch": Family.CH, "arch": Family.CH, "cosh": Family.CH,
}


@dataclass(frozen=True)
class TrigOrder:
    k: int
    n: int

    def __post_init__(self):
        if self.k < 2 or self.n < 1:
            raise DomainError(f"need k >= 2 and n >= 1, got ({self.k}, {self.n})")

    @property
    def arc_domain(self) -> Tuple[float, float]:
        """Domain of arcs/arcc: [-1, 1] for even n, (-inf, 1] for odd n."""
        return (-1.0, 1.0) if self.n % 2 == 0 else (-INF, 1.0)

    @property
    def area_domain(self) -> Tuple[float, float]:
        """Domain of arsh: the real line for even n, [-1, inf) for odd n."""
        return (-INF, INF) if self.n % 2 == 0 else (-1.0, INF)

    @property
    def tails_converge(self) -> bool:
        """Whether the integrands are integrable at infinity (n > k)."""
        return self.n > self.k


@dataclass(frozen=True)
class BranchSelector:
    l: int = 1
    mu: int = 1

    def __post_init__(self):
        if self.l < 1 or self.mu < 1 or self.l % 2 == 0 or self.mu % 2 == 0:
            raise DomainError(f"branch labels must be odd positive integers, got l={self.l}, mu={self.mu}")


def root_of_unity(m: int, j: int) -> complex:
    """exp(2 pi i j / m), exact on the axes."""
    j %= m
    if (4 * j) % m == 0:
        return (1, 1j, -1, -1j)[4 * j // m]
    return cmath.rect(1.0, 2 * math.pi * j / m)


# --------------------------------------------------------------------------
# real forward integrals


def _tol(tol):
    return tol or DEFAULT_TOL


def _quarter(order: TrigOrder, tol) -> float:
    """arcs_{k,n}(1) = pi_{k,n,1} / 2."""
    return pi_aux(order.k, order.n, 1, Method.QUADRATURE, tol).value / 2


def _one_minus_pow(n, t, dist_to_one):
    if t > 0.5:
        return -math.expm1(n * math.log1p(-dist_to_one))
    return 1.0 - t**n


def _arcs_unit(order: TrigOrder, x: float, tol) -> float:
    """int_0^x (1 - t^n)^(-1/k) for 0 <= x <= 1."""
    if x == 0:
        return 0.0
    k, n = order.k, order.n
    gap = 1.0 - x

    def f(t, da, db):
        return _one_minus_pow(n, t, gap + db) ** (-1.0 / k)

    return integrate_finite(f, 0.0, x, tol, with_complement=True).value


def _arcc_unit(order: TrigOrder, x: float, tol) -> float:
    """int_x^1 (1 - t^n)^(-1/k) for 0 <= x < 1."""
    k, n = order.k, order.n

    def f(t, da, db):
        return _one_minus_pow(n, t, db) ** (-1.0 / k)

    return integrate_finite(f, x, 1.0, tol, with_complement=True).value


def _arsh_positive(order: TrigOrder, x: float, tol) -> float:
    """int_0^x (1 + t^n)^(-1/k) for 0 <= x <= inf; the part beyond 1 uses t = 1/u."""
    if x == 0:
        return 0.0
    k, n = order.k, order.n
    head = integrate_finite(lambda t: (1.0 + t**n) ** (-1.0 / k), 0.0, min(x, 1.0), tol).value
    if x <= 1:
        return head
    if x == INF and not order.tails_converge:
        raise DomainError(f"arsh_{{{k},{n}}} diverges at infinity")
    p = n / k - 2.0

    lower = 0.0 if x == INF else 1.0 / x

    def g(u, da, db):
        return (lower + da) ** p * (1.0 + u**n) ** (-1.0 / k)

    return head + integrate_finite(g, lower, 1.0, tol, with_complement=True).value


def _arch(order: TrigOrder, x: float, tol) -> float:
    """int_1^x (t^n - 1)^(-1/k) for x >= 1; the part beyond 2 uses t = 1/u."""
    if x == 1:
        return 0.0
    k, n = order.k, order.n

    def f(t, da, db):
        return math.expm1(n * math.log1p(da)) ** (-1.0 / k)

    head = integrate_finite(f, 1.0, min(x, 2.0), tol, with_complement=True).value
    if x <= 2:
        return head
    if x == INF and not order.tails_converge:
        raise DomainError(f"arch_{{{k},{n}}} diverges at infinity")
    p = n / k - 2.0

    lower = 0.0 if x == INF else 1.0 / x

    def g(u, da, db):
        return (lower + da) ** p * (1.0 - u**n) ** (-1.0 / k)

    return head + integrate_finite(g, lower, 0.5, tol, with_complement=True).value


def _arcs(order: TrigOrder, x: float, tol) -> float:
    lo, hi = order.arc_domain
    if not lo <= x <= hi:
        raise DomainError(f"x={x} outside the domain [{lo}, {hi}] of arcs_{{{order.k},{order.n}}}")
    if x >= 0:
        return _arcs_unit(order, x, tol)
    if order.n % 2 == 0:
        return -_arcs_unit(order, -x, tol)
    # odd n: 1 - t^n = 1 + |t|^n for negative t
    return -_arsh_positive(order, -x, tol)


def _arsh(order: TrigOrder, x: float, tol) -> float:
    lo, hi = order.area_domain
    if not lo <= x <= hi:
        raise DomainError(f"x={x} outside the domain [{lo}, {hi}] of arsh_{{{order.k},{order.n}}}")
    if x >= 0:
        return _arsh_positive(order, x, tol)
    if order.n % 2 == 0:
        return -_arsh_positive(order, -x, tol)
    return -_arcs_unit(order, -x, tol)


def arc_integral(family, order: TrigOrder, x: float, tol: Optional[ToleranceConfig] = None) -> float:
    """Forward integral of the given family at real x.

    Odd n admits x = -inf for S (and x = +inf for SH, CH) when n > k, where
    the improper integral converges.
    """
    family = Family(family)
    tol = _tol(tol)
    if family is Family.S:
        return _arcs(order, x, tol)
    if family is Family.C:
        lo, hi = order.arc_domain
        if not lo <= x <= hi:
            raise DomainError(f"x={x} outside the domain of arcc_{{{order.k},{order.n}}}")
        if x >= 0:
            return _arcc_unit(order, x, tol) if x < 1 else 0.0
        return _quarter(order, tol) - _arcs(order, x, tol)
    if family is Family.SH:
        return _arsh(order, x, tol)
    if x < 1:
        raise DomainError(f"arch needs x >= 1, got {x}")
    return _arch(order, x, tol)


def integrand(family, order: TrigOrder, x: float) -> float:
    """Derivative of the forward integral at an interior point x."""
    family = Family(family)
    k, n = order.k, order.n
    if family is Family.S:
        return (1.0 - x**n) ** (-1.0 / k)
    if family is Family.C:
        return -((1.0 - x**n) ** (-1.0 / k))
    if family is Family.SH:
        return (1.0 + x**n) ** (-1.0 / k)
    return (x**n - 1.0) ** (-1.0 / k)


def image(family, order: TrigOrder, tol: Optional[ToleranceConfig] = None) -> Tuple[float, float]:
    """Closed image interval of the forward map (infinite ends allowed)."""
    family = Family(family)
    tol = _tol(tol)
    A = _quarter(order, tol)
    even = order.n % 2 == 0
    tail = _arsh_positive(order, INF, tol) if order.tails_converge else INF
    if family is Family.S:
        return (-A, A) if even else (-tail, A)
    if family is Family.C:
        return (0.0, 2 * A) if even else (0.0, A + tail)
    if family is Family.SH:
        return (-tail, tail) if even else (-A, tail)
    return (0.0, _arch(order, INF, tol) if order.tails_converge else INF)


def _expand_bracket(f, lo, step):
    """Move `hi` = lo + step outward until f changes sign."""
    hi = lo + step
    for _ in range(200):
        if f(hi) > 0:
            return hi
        lo, hi = hi, lo + 2 * (hi - lo)
    raise OutOfImage("could not bracket the preimage")


def inverse_trig(family, order: TrigOrder, y: float, tol: Optional[ToleranceConfig] = None) -> float:
    """Inverse of `arc_integral` in x: returns x with arc_integral(family, order, x) = y."""
    family = Family(family)
    tol = _tol(tol)
    lo_img, hi_img = image(family, order, tol)
    if not lo_img <= y <= hi_img or (y == lo_img and lo_img == -INF) or y in (INF, -INF):
        raise OutOfImage(f"y={y} outside the image [{lo_img}, {hi_img}] of {family.value}_{{{order.k},{order.n}}}")
    if family is Family.S and order.n % 2 == 1 and y == lo_img:
        raise OutOfImage("the limit at -inf is not attained")
    fwd = lambda x: arc_integral(family, order, x, tol)  # noqa: E731
    deriv = lambda x: integrand(family, order, x)  # noqa: E731
    root_tol = ToleranceConfig(1e-14, tol.target_rel, tol.max_levels, tol.max_terms)

    def solve(lo, hi, target):
        return find_root_monotone(lambda x: fwd(x) - target, lo, hi, root_tol, fprime=deriv)

    A = _quarter(order, tol)
    if family is Family.S:
        if y == A:
            return 1.0
        if y >= 0:
            return solve(0.0, 1.0, y)
        if order.n % 2 == 0:
            return -solve(0.0, 1.0, -y)
        # odd n: arcs(-u) = -arsh(u), so the negative side extends to -inf
        return -inverse_trig(Family.SH, order, -y, tol)
    if family is Family.C:
        if y == 0:
            return 1.0
        if y <= A:
            return solve(0.0, 1.0, y)
        # arcc(x) = A - arcs(x) on the negative side
        return inverse_trig(Family.S, order, A - y, tol)
    if family is Family.SH:
        if y >= 0:
            g = lambda x: fwd(x) - y  # noqa: E731
            hi = _expand_bracket(g, 0.0, 1.0)
            return solve(0.0, hi, y)
        if order.n % 2 == 0:
            return -inverse_trig(Family.SH, order, -y, tol)
        return -inverse_trig(Family.S, order, -y, tol)
    if y == 0:
        return 1.0
    g = lambda x: fwd(x) - y  # noqa: E731
    hi = _expand_bracket(g, 1.0, 1.0)
    return solve(1.0, hi, y)


# --------------------------------------------------------------------------
# complex continuation near the origin

SERIES_GUARD = 0.9
NEWTON_RADIUS = 0.95


def arcs_series_complex(order: TrigOrder, z: complex, tol: Optional[ToleranceConfig] = None, family=Family.S) -> complex:
    """Power series of arcs, arcc or arsh at complex |z| <= 0.9."""
    family = Family(family)
    tol = _tol(tol)
    z = complex(z)
    if abs(z) > SERIES_GUARD:
        raise DomainError(f"|z|={abs(z):.4g} outside the certified disk |z| <= {SERIES_GUARD}")
    if family is Family.S:
        return complex(sum_arcs_series(order.k, order.n, z, tol))
    if family is Family.SH:
        return complex(sum_arcs_series(order.k, order.n, z, tol, hyperbolic=True))
    if family is Family.C:
        return _quarter(order, tol) - complex(sum_arcs_series(order.k, order.n, z, tol))
    raise DomainError("no power series for arch around 0")


def _binomial_one_minus(n: int, delta: complex) -> complex:
    """1 - (1 - delta)^n, expanded so that small delta keeps full precision."""
    total = 0j
    c = 1
    p = 1 + 0j
    for j in range(1, n + 1):
        c = c * (n - j + 1) // j
        p *= -delta
        total -= c * p
    return total


def _one_minus_pow_near_one(n: int, u: complex, delta: complex) -> complex:
    """1 - u^n where u = 1 - delta."""
    if abs(delta) < 0.5:
        return _binomial_one_minus(n, delta)
    return 1 - u**n


def path_integral(g, a: complex, z: complex, tol=None, singular_end=None) -> complex:
    """int over the straight segment [a, z] of g(u) du.

    With ``singular_end='a'`` or ``'z'`` the integrand is called as
    ``g(u, offset)``, where `offset` is the exact displacement of u from
    that endpoint.
    """
    tol = _tol(tol)
    d = z - a
    if d == 0:
        return 0j
    if singular_end == "a":
        f = lambda t, ta, tb: g(a + ta * d, ta * d)  # noqa: E731
    elif singular_end == "z":
        f = lambda t, ta, tb: g(z - tb * d, -tb * d)  # noqa: E731
    else:
        f = lambda t, ta, tb: g(a + t * d)  # noqa: E731
    return d * integrate_finite(f, 0.0, 1.0, tol, with_complement=True).value


def arsh_path(order: TrigOrder, w: complex, tol=None) -> complex:
    """arsh along [0, w] with the principal root."""
    k, n = order.k, order.n
    return path_integral(lambda u: (1 + u**n) ** (-1.0 / k), 0j, complex(w), tol)


def arcs_path(order: TrigOrder, w: complex, tol=None) -> complex:
    k, n = order.k, order.n
    return path_integral(lambda u: (1 - u**n) ** (-1.0 / k), 0j, complex(w), tol)


def arcc_path(order: TrigOrder, w: complex, tol=None) -> complex:
    """arcc along [w, 1] with the principal root of 1 - u^n."""
    k, n = order.k, order.n

    def g(u, off):  # off = u - 1
        return _one_minus_pow_near_one(n, u, -off) ** (-1.0 / k)

    return path_integral(g, complex(w), 1 + 0j, tol, singular_end="z")


def _arch_factor(order: TrigOrder, l: int, sheet: int) -> complex:
    # arch(w) = factor * arcc(w) with factor = zeta_2k^(2k-l) * zeta_k^(-sheet)
    return root_of_unity(2 * order.k, 2 * order.k - l) * root_of_unity(order.k, -sheet)


def arch_path(order: TrigOrder, w: complex, l: int = 1, sheet: int = 0, tol=None) -> complex:
    """Continuation of arch into the disk along [1, w].

    The root of u^n - 1 is taken as -zeta_2k^l zeta_k^sheet (1 - u^n)^(1/k).
    For even k this is a genuine branch of (u^n - 1)^(1/k); for odd k the
    sign is fixed so that arch(w) = zeta_2k^(2k-l) arcc(w) holds on sheet 0.
    """
    k, n = order.k, order.n
    c = -_arch_factor(order, l, sheet)

    def g(u, off):  # off = u - 1
        return c * _one_minus_pow_near_one(n, u, -off) ** (-1.0 / k)

    return path_integral(g, 1 + 0j, complex(w), tol, singular_end="a")


def _newton(F, dF, w0, guard, what, max_iter=60):
    if not guard(w0):
        raise BranchError(f"{what}: starting point {w0} lies outside the certified neighborhood")
    try:
        return _newton_steps(F, dF, w0, guard, what, max_iter)
    except (DomainError, NonConvergence) as exc:
        raise BranchError(f"{what}: {exc}") from exc


def _newton_steps(F, dF, w0, guard, what, max_iter):
    w = w0
    for _ in range(max_iter):
        fw = F(w)
        d = dF(w)
        if d == 0 or not cmath.isfinite(d):
            raise BranchError(f"{what}: derivative degenerate at w={w}")
        step = fw / d
        w_new = w - step
        halvings = 0
        while not guard(w_new):
            step *= 0.5
            w_new = w - step
            halvings += 1
            if halvings > 30:
                raise BranchError(f"{what}: Newton step leaves the admissible region at w={w}")
        if abs(w_new - w) <= 1e-15 * max(1.0, abs(w_new)) or abs(fw) <= 1e-15:
            return w_new
        w = w_new
    raise BranchError(f"{what}: Newton iteration did not converge (last w={w})")


def s_complex(order: TrigOrder, y: complex, tol=None) -> complex:
    """Inverse of arcs near 0 by Newton on the power series."""
    y = complex(y)
    if y == 0:
        return 0j
    k, n = order.k, order.n
    F = lambda w: arcs_series_complex(order, w, tol) - y  # noqa: E731
    dF = lambda w: (1 - w**n) ** (-1.0 / k)  # noqa: E731
    return _newton(F, dF, y, lambda w: abs(w) < NEWTON_RADIUS, "s")


def sh_complex(order: TrigOrder, y: complex, tol=None) -> complex:
    """Inverse of arsh near 0 by Newton on the power series."""
    y = complex(y)
    if y == 0:
        return 0j
    k, n = order.k, order.n
    F = lambda w: arcs_series_complex(order, w, tol, Family.SH) - y  # noqa: E731
    dF = lambda w: (1 + w**n) ** (-1.0 / k)  # noqa: E731
    return _newton(F, dF, y, lambda w: abs(w) < NEWTON_RADIUS, "sh")


def _pick_sheet(k: int, target: complex) -> int:
    """Sheet j minimizing |arg(zeta_k^j target)|."""
    return min(range(k), key=lambda j: abs(cmath.phase(root_of_unity(k, j) * target)))


def _seed_near_one(order: TrigOrder, Y: complex) -> complex:
    # arcc(w) ~ n^(-1/k) (1-w)^(1-1/k) / (1-1/k) near w = 1
    k, n = order.k, order.n
    return 1 - ((1 - 1 / k) * n ** (1 / k) * Y) ** (k / (k - 1))


def c_complex(order: TrigOrder, y: complex, tol=None) -> complex:
    """Inverse of arcc near w = 1, by Newton on the path integral over [w, 1].

    For k >= 3 arcc is multivalued around w = 1; the sheet that brings `y`
    closest to the positive real axis is used.
    """
    y = complex(y)
    if y == 0:
        return 1 + 0j
    k, n = order.k, order.n
    j = _pick_sheet(k, y)
    Y = root_of_unity(k, j) * y
    F = lambda w: arcc_path(order, w, tol) - Y  # noqa: E731
    dF = lambda w: -((1 - w**n) ** (-1.0 / k))  # noqa: E731
    return _newton(F, dF, _seed_near_one(order, Y), lambda w: abs(1 - w) < 1.0, "c")


def ch_complex(order: TrigOrder, z: complex, l: int = 1, tol=None) -> complex:
    """Inverse of the continued arch near w = 1, by Newton on the path integral over [1, w]."""
    z = complex(z)
    if z == 0:
        return 1 + 0j
    k, n = order.k, order.n
    base = root_of_unity(2 * k, l) * z
    j = _pick_sheet(k, base)
    c = -_arch_factor(order, l, j)
    F = lambda w: arch_path(order, w, l, j, tol) - z  # noqa: E731
    dF = lambda w: c * (1 - w**n) ** (-1.0 / k)  # noqa: E731
    seed = _seed_near_one(order, root_of_unity(k, j) * base)
    return _newton(F, dF, seed, lambda w: abs(1 - w) < 1.0, "ch")


def e_function_hyperbolic(orders: Sequence[int], z: complex, branch: BranchSelector = BranchSelector(), tol=None) -> complex:
    """e_{k,m,n}(z) = ch_{k,n}(z) + sh_{m,n}(z) from the hyperbolic inverses."""
    k, m, n = orders
    return ch_complex(TrigOrder(k, n), z, branch.l, tol) + sh_complex(TrigOrder(m, n), z, tol)


def e_function(orders: Sequence[int], z: complex, branch: BranchSelector = BranchSelector(), tol=None) -> complex:
    """e_{k,m,n}(z) through the circular functions:

        c_{k,n}(zeta_2k^l z) + zeta_2n^mu s_{m,n}(zeta_2n^(2n-mu) z)
    """
    k, m, n = orders
    z = complex(z)
    rot_c = root_of_unity(2 * k, branch.l) * z
    rot_s = root_of_unity(2 * n, 2 * n - branch.mu) * z
    return c_complex(TrigOrder(k, n), rot_c, tol) + root_of_unity(2 * n, branch.mu) * s_complex(TrigOrder(m, n), rot_s, tol)


def corollary_branch(orders: Sequence[int]) -> Tuple[BranchSelector, complex]:
    """Default branch and the ray direction on which the identity reduces to a
    sum of real-argument circular functions."""
    k, m, n = orders
    if k == n and n % 2 == 1 and n >= 3:
        b = BranchSelector(n, n)
    elif k == n and n % 2 == 0 and n >= 4:
        b = BranchSelector(n + 1, n - 1)
    else:
        b = BranchSelector(1, 1)
    return b, root_of_unity(2 * n, b.mu)


class LCG:
    """32-bit linear congruential generator (Numerical Recipes constants).

    Used for sample grids so reports are identical on every platform.
    """

    def __init__(self, seed: int):
        self.state = seed & 0xFFFFFFFF

    def next_u32(self) -> int:
        self.state = (1664525 * self.state + 1013904223) & 0xFFFFFFFF
        return self.state

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.next_u32() / 2**32


def sample_points(seed: int, count: int, direction: complex, r_range=(0.05, 0.35), spread=0.25) -> List[complex]:
    """Points r e^(i theta) * direction with r and theta drawn from the LCG."""
    rng = LCG(seed)
    pts = []
    for _ in range(count):
        r = rng.uniform(*r_range)
        theta = rng.uniform(-spread, spread)
        pts.append(direction * cmath.rect(r, theta))
    return pts


def verify_rotation_identity(
    orders: Sequence[int],
    branch: BranchSelector,
    sample_points: Iterable[complex],
    tol_abs: float = 1e-9,
    tol=None,
) -> List[IdentityResidual]:
    """Certify e_{k,m,n}(z) = c_{k,n}(zeta_2k^l z) + zeta_2n^mu s_{m,n}(zeta_2n^(2n-mu) z).

    The left side inverts the hyperbolic functions (arsh series, arch path
    integral); the right side inverts the circular ones. The two forward
    relations behind the identity are checked as well, path quadrature
    against power series, at each point with |w| <= 0.5.
    """
    k, m, n = orders
    tag = f"({k},{m},{n}),l={branch.l},mu={branch.mu}"
    ck, sm = TrigOrder(k, n), TrigOrder(m, n)
    zmu = root_of_unity(2 * n, branch.mu)
    out = []
    for i, z in enumerate(sample_points):
        z = complex(z)
        lhs = e_function_hyperbolic(orders, z, branch, tol)
        rhs = e_function(orders, z, branch, tol)
        out.append(residual(f"rotation[{tag}][{i:02d}]", lhs, rhs, tol_abs, 0.0))
        if abs(z) <= 0.5:
            fwd_l = arsh_path(sm, z, tol)
            fwd_r = zmu * arcs_series_complex(sm, root_of_unity(2 * n, 2 * n - branch.mu) * z, tol)
            out.append(residual(f"rotation.arsh_forward[{tag}][{i:02d}]", fwd_l, fwd_r, tol_abs, 0.0))
            fwd_l = arch_path(ck, z, branch.l, 0, tol)
            fwd_r = _arch_factor(ck, branch.l, 0) * arcs_series_complex(ck, z, tol, Family.C)
            out.append(residual(f"rotation.arch_forward[{tag}][{i:02d}]", fwd_l, fwd_r, tol_abs, 0.0))
    return out
