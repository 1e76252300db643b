"""Named verification suites: each returns a flat list of residuals."""

from __future__ import annotations

import cmath
import math
import warnings
from typing import Callable, Dict, List, Optional

from . import applications as app
from . import constants as cst
from . import gammafn as gf
from . import hypertrig as ht
from .errors import AccuracyWarning
from .numkernel import ToleranceConfig, sum_arcs_series
from .residuals import IdentityResidual, residual

SUITE_NAMES = ("constants", "gamma", "trig", "applications", "classical", "all")

# 50 points spread over (0, 10]
FUNCTIONAL_EQUATION_GRID = tuple(round(0.05 + 0.2 * i, 10) for i in range(50))

ROTATION_CASES = ((2, 2, 2), (2, 2, 4), (3, 2, 3), (4, 2, 4))
ROTATION_POINTS = 20

ROUND_TRIP_GRID = {
    ht.Family.S: (-0.9, -0.4, 0.15, 0.6, 0.95),
    ht.Family.C: (-0.9, -0.2, 0.1, 0.5, 0.97),
    ht.Family.SH: (-0.7, -0.2, 0.3, 1.5, 4.0),
    ht.Family.CH: (1.02, 1.5, 2.5, 6.0),
}


def constants_suite(seed: int = 42, tol: Optional[ToleranceConfig] = None) -> List[IdentityResidual]:
    out = cst.method_agreement(range(2, 17), 1e-11, tol)
    out.append(residual("pi_2.vs_pi", cst.pi_n(2, cst.Method.QUADRATURE, tol).value, math.pi, 1e-13, 0.0))
    out.extend(cst.check_constant_relations(16, tol=tol))
    out.extend(cst.curva_elastica_products(range(1, 9), tol=tol))
    return out


def gamma_suite(seed: int = 42, tol: Optional[ToleranceConfig] = None) -> List[IdentityResidual]:
    out = gf.halving_residuals(range(2, 13), tol=tol)
    out.extend(gf.dyadic_residuals(range(1, 6), tol=tol))
    out.extend(gf.closed_form_residuals(tol=tol))
    out.extend(gf.auxiliary_residuals(8, 8, tol=tol))
    out.extend(gf.functional_equation_residuals(FUNCTIONAL_EQUATION_GRID, tol=tol))
    for s in (0.5, 1.0, 1.5, 2.5):
        for order in range(4):
            out.append(gf.derivative_recurrence_residual(order, s, tol=tol))
            out.append(gf.boundary_term_residual(order, s, tol=tol))
            out.append(gf.derivative_integral_residual(order, s, tol=tol))
    for s in (0.1, 0.2):
        out.extend(gf.shifted_series_residuals(s, 5, tol))
    return out


def round_trip_residuals(tol: Optional[ToleranceConfig] = None, tol_abs: float = 1e-11) -> List[IdentityResidual]:
    out = []
    for family, grid in ROUND_TRIP_GRID.items():
        for k in (2, 3):
            for n in (2, 3, 4, 6):
                order = ht.TrigOrder(k, n)
                for x in grid:
                    y = ht.arc_integral(family, order, x, tol)
                    back = ht.inverse_trig(family, order, y, tol)
                    out.append(residual(f"trig.round_trip[{family.value},k={k},n={n},x={x:g}]", back, x, tol_abs, 0.0))
    return out


def trig_property_residuals(tol: Optional[ToleranceConfig] = None) -> List[IdentityResidual]:
    out = []
    for k in (2, 3):
        for n in (2, 3, 4, 6):
            order = ht.TrigOrder(k, n)
            quarter = cst.pi_aux(k, n, 1, cst.Method.BETA, tol).value / 2
            for x in (0.0, 0.3, 0.7, 0.99):
                total = ht.arc_integral("s", order, x, tol) + ht.arc_integral("c", order, x, tol)
                out.append(residual(f"trig.complement[k={k},n={n},x={x:g}]", total, quarter, 1e-12, 1e-12))
            for x in (0.2, 0.5, 0.85):
                series = sum_arcs_series(k, n, x, tol)
                out.append(residual(f"trig.series_vs_quadrature[k={k},n={n},x={x:g}]", ht.arc_integral("s", order, x, tol), series, 1e-12, 1e-12))
                if n % 2 == 0:
                    out.append(
                        residual(
                            f"trig.odd_symmetry[k={k},n={n},x={x:g}]",
                            ht.arc_integral("s", order, -x, tol),
                            -ht.arc_integral("s", order, x, tol),
                            1e-14,
                            0.0,
                        )
                    )
            for z in (0.4 + 0.2j, -0.3 + 0.6j, 0.5j, -0.65 - 0.1j):
                out.append(
                    residual(
                        f"trig.complex_series_vs_path[k={k},n={n},z={z}]",
                        ht.arcs_series_complex(order, z, tol),
                        ht.arcs_path(order, z, tol),
                        1e-10,
                        0.0,
                    )
                )
    return out


def rotation_residuals(seed: int = 42, tol: Optional[ToleranceConfig] = None, count: int = ROTATION_POINTS) -> List[IdentityResidual]:
    out = []
    for i, orders in enumerate(ROTATION_CASES):
        branch, direction = ht.corollary_branch(orders)
        points = ht.sample_points(seed + i, count, direction)
        out.extend(ht.verify_rotation_identity(orders, branch, points, 1e-9, tol))
    # on the imaginary axis e_{2,2,2} is cos + i sin
    for j, phi in enumerate(p.imag for p in ht.sample_points(seed, 8, 1j, spread=0.0)):
        out.append(
            residual(
                f"trig.euler[(2,2,2)][{j:02d}]",
                ht.e_function((2, 2, 2), 1j * phi, tol=tol),
                cmath.exp(1j * phi),
                1e-12,
                0.0,
            )
        )
    return out


def trig_suite(seed: int = 42, tol: Optional[ToleranceConfig] = None) -> List[IdentityResidual]:
    return round_trip_residuals(tol) + trig_property_residuals(tol) + rotation_residuals(seed, tol)


def applications_suite(seed: int = 42, tol: Optional[ToleranceConfig] = None) -> List[IdentityResidual]:
    out = app.singular_value_suite(tol)
    out.extend(app.agm_identity_suite(tol))
    out.extend(app.elliptic_checks(tol))
    out.extend(app.superellipse_residuals(tol=tol))
    out.extend(app.zeta_ratio_suite(tol))
    out.extend(app.polygamma_identity_checks(tol))
    return out


def classical_suite(seed: int = 42, tol: Optional[ToleranceConfig] = None) -> List[IdentityResidual]:
    return gf.verify_classical(tol=tol)


SUITES: Dict[str, Callable[..., List[IdentityResidual]]] = {
    "constants": constants_suite,
    "gamma": gamma_suite,
    "trig": trig_suite,
    "applications": applications_suite,
    "classical": classical_suite,
}


def run_suite(name: str, seed: int = 42, tol: Optional[ToleranceConfig] = None) -> List[IdentityResidual]:
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    names = list(SUITES) if name == "all" else [name]
    out = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", AccuracyWarning)
        for n in names:
            out.extend(SUITES[n](seed, tol))
    return out
