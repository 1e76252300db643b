"""Residual records for numerically certified identities."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Optional, Union

Number = Union[float, complex]


@dataclass(frozen=True)
class IdentityResidual:
    name: str
    lhs: Number
    rhs: Number
    abs_residual: float
    rel_residual: float
    passed: bool
    tol_abs: float
    tol_rel: float
    warning: Optional[str] = None
    kind: str = "identity"

    def with_tolerance(self, tol_abs: float, tol_rel: float) -> "IdentityResidual":
        if self.kind != "identity":
            return self
        return dataclasses.replace(
            self,
            tol_abs=tol_abs,
            tol_rel=tol_rel,
            passed=self.abs_residual <= max(tol_abs, tol_rel * abs(self.rhs)),
        )


def residual(
    name: str,
    lhs: Number,
    rhs: Number,
    tol_abs: float = 0.0,
    tol_rel: float = 0.0,
    warning: Optional[str] = None,
) -> IdentityResidual:
    """Compare two independently computed sides of an identity.

    Passes when ``|lhs - rhs| <= max(tol_abs, tol_rel * |rhs|)``.
    """
    diff = abs(lhs - rhs)
    scale = abs(rhs)
    rel = diff / scale if scale else diff
    ok = diff <= max(tol_abs, tol_rel * scale)
    return IdentityResidual(name, lhs, rhs, diff, rel, ok, tol_abs, tol_rel, warning)


def bound(name: str, lhs: float, rhs: float, warning: Optional[str] = None) -> IdentityResidual:
    """Strict inequality ``lhs < rhs``; the residual is the size of any violation."""
    violation = max(0.0, lhs - rhs)
    ok = lhs < rhs
    return IdentityResidual(name, lhs, rhs, violation, violation, ok, 0.0, 0.0, warning, "bound")
