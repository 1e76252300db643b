"""Command-line interface.

    hypergamma constants --n 2..8 --method all
    hypergamma gamma --arg 1/4 --routes reference,closed
    hypergamma trig --family arcs --k 2 --n 2 --x 0.5
    hypergamma verify --suite all --seed 42 --format json

Exit codes: 0 when every residual passes, 1 when at least one identity
fails, 2 on a computational or usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
import warnings
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from . import __version__
from .constants import Method, pi_n
from .errors import AccuracyWarning, HypergammaError
from .gammafn import closed_form, gamma_duplication, gamma_reference, gamma_reflection, parse_rational
from .hypertrig import FAMILY_ALIASES, Family, TrigOrder, arc_integral, integrand, inverse_trig
from .numkernel import ToleranceConfig
from .residuals import IdentityResidual, residual
from .suites import SUITE_NAMES, run_suite

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2
FORMATS = ("json", "csv", "text")
GAMMA_ROUTES = ("reference", "closed", "reflection", "duplication")
ARC_NAMES = {Family.S: "arcs", Family.C: "arcc", Family.SH: "arsh", Family.CH: "arch"}


@dataclass
class RunConfig:
    command: str
    suite: Optional[str] = None
    tol_abs: Optional[float] = None
    tol_rel: Optional[float] = None
    format: str = "text"
    seed: int = 42
    output_path: Optional[str] = None

    def __post_init__(self):
        for t in (self.tol_abs, self.tol_rel):
            if t is not None and not t > 0:
                raise ValueError("tolerances must be positive")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")

    def echo(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "suite": self.suite,
            "tol_abs": self.tol_abs,
            "tol_rel": self.tol_rel,
            "seed": self.seed,
        }


@dataclass
class Report:
    config: RunConfig
    results: List[IdentityResidual] = field(default_factory=list)
    values: List[Dict[str, Any]] = field(default_factory=list)
    value_columns: tuple = ()
    wall_time: float = 0.0

    @property
    def summary(self) -> Dict[str, int]:
        passed = sum(r.passed for r in self.results)
        return {
            "total": len(self.results),
            "pass": passed,
            "fail": len(self.results) - passed,
            "warn": sum(r.warning is not None for r in self.results),
        }

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.summary["fail"] == 0 else EXIT_FAIL


def _num(x):
    """JSON-safe number: complex as {re, im}, non-finite as a string."""
    if isinstance(x, complex):
        return {"re": _num(x.real), "im": _num(x.imag)}
    if isinstance(x, float) and not math.isfinite(x):
        return repr(x)
    return x


def _record(r: IdentityResidual) -> Dict[str, Any]:
    rec = {
        "name": r.name,
        "kind": r.kind,
        "lhs": _num(r.lhs),
        "rhs": _num(r.rhs),
        "abs_residual": _num(r.abs_residual),
        "rel_residual": _num(r.rel_residual),
        "tol_abs": r.tol_abs,
        "tol_rel": r.tol_rel,
        "pass": r.passed,
    }
    if r.warning:
        rec["warning"] = r.warning
    return rec


def render_json(report: Report) -> str:
    # wall time is left out so identical configs give identical bytes
    doc = {
        "schema_version": SCHEMA_VERSION,
        "meta": {"artifact_version": __version__, "config": report.config.echo()},
        "values": [{k: _num(v) for k, v in row.items()} for row in report.values],
        "results": [_record(r) for r in sorted(report.results, key=lambda r: r.name)],
        "summary": report.summary,
    }
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


RESIDUAL_COLUMNS = ("name", "kind", "lhs", "rhs", "abs_residual", "rel_residual", "pass")


def render_csv(report: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if report.values:
        w.writerow(report.value_columns)
        for row in report.values:
            w.writerow([repr(row[c]) if isinstance(row[c], float) else row[c] for c in report.value_columns])
    if report.results:
        if report.values:
            w.writerow([])
        w.writerow(RESIDUAL_COLUMNS)
        for r in sorted(report.results, key=lambda r: r.name):
            w.writerow([r.name, r.kind, repr(r.lhs), repr(r.rhs), repr(r.abs_residual), repr(r.rel_residual), str(r.passed).lower()])
    return buf.getvalue()


def render_text(report: Report) -> str:
    lines = []
    for row in report.values:
        lines.append("  ".join(f"{c}={row[c]!r}" if isinstance(row[c], float) else f"{c}={row[c]}" for c in report.value_columns))
    for r in sorted(report.results, key=lambda r: r.name):
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status}  {r.name}  residual={r.abs_residual:.3e}" + (f"  ({r.warning})" if r.warning else ""))
    s = report.summary
    if report.results:
        lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['warn']} with warnings, {report.wall_time:.2f}s")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": render_json, "csv": render_csv, "text": render_text}


def kernel_tolerance() -> ToleranceConfig:
    """Default tolerances, with the quadrature depth taken from HYPERGAMMA_MAX_LEVELS if set."""
    levels = os.environ.get("HYPERGAMMA_MAX_LEVELS")
    if levels is None:
        return ToleranceConfig()
    return ToleranceConfig(max_levels=int(levels))


def parse_n_range(text: str) -> List[int]:
    """'4', '2..8' or '2,3,5'."""
    if ".." in text:
        lo, hi = text.split("..")
        ns = list(range(int(lo), int(hi) + 1))
    else:
        ns = [int(t) for t in text.split(",")]
    if not ns or any(not 1 <= n <= 64 for n in ns):
        raise ValueError(f"n must lie in 1..64, got {text!r}")
    return ns


def cmd_constants(args, cfg: RunConfig, tol: ToleranceConfig) -> Report:
    ns = parse_n_range(args.n)
    methods = list(Method) if args.method == "all" else [Method(args.method)]
    report = Report(cfg, value_columns=("n", "method", "value", "achieved_tol"))
    for n in ns:
        vals = {}
        for m in methods:
            cv = pi_n(n, m, tol)
            vals[m] = cv.value
            report.values.append({"n": n, "method": m.value, "value": cv.value, "achieved_tol": cv.achieved_tol})
        for i, m1 in enumerate(methods):
            for m2 in methods[i + 1 :]:
                report.results.append(
                    residual(f"pi_n.{m1.value}_vs_{m2.value}[n={n}]", vals[m1], vals[m2], cfg.tol_abs or 0.0, cfg.tol_rel or 1e-11)
                )
    return report


def cmd_gamma(args, cfg: RunConfig, tol: ToleranceConfig) -> Report:
    arg = parse_rational(args.arg)
    x = float(arg)
    routes = [r.strip() for r in args.routes.split(",")]
    for r in routes:
        if r not in GAMMA_ROUTES:
            raise ValueError(f"unknown route {r!r}; choose from {', '.join(GAMMA_ROUTES)}")
    report = Report(cfg, value_columns=("arg", "route", "value"))
    ref = gamma_reference(x, tol)
    tol_abs, tol_rel = cfg.tol_abs or 0.0, cfg.tol_rel or 1e-10
    for r in routes:
        if r == "reference":
            value = ref
        elif r == "closed":
            gv = closed_form(arg, tol)
            if gv is None:
                report.values.append({"arg": str(arg), "route": r, "value": "unavailable"})
                continue
            value = gv.value
        elif r == "reflection":
            value = gamma_reflection(x, tol)
        else:
            value = gamma_duplication(x, tol)
        report.values.append({"arg": str(arg), "route": r, "value": value})
        if r != "reference":
            report.results.append(residual(f"gamma.{r}_vs_reference[{arg}]", value, ref, tol_abs, tol_rel))
    return report


def cmd_trig(args, cfg: RunConfig, tol: ToleranceConfig) -> Report:
    family = FAMILY_ALIASES.get(args.family.lower())
    if family is None:
        raise ValueError(f"unknown family {args.family!r}")
    order = TrigOrder(args.k, args.n)
    report = Report(cfg, value_columns=("family", "k", "n", "input", "value"))
    if args.inverse:
        if args.y is None:
            raise ValueError("--inverse needs --y")
        value = inverse_trig(family, order, args.y, tol)
        report.values.append({"family": family.value, "k": args.k, "n": args.n, "input": args.y, "value": value})
        back = arc_integral(family, order, value, tol)
        # near a singular endpoint one ulp in x moves y by |dy/dx| ulp(x)
        slope = abs(integrand(family, order, value)) if value not in (1.0, -1.0) else math.inf
        floor = 4 * slope * math.ulp(value)
        tol_abs = cfg.tol_abs or 1e-11
        note = None
        if floor > tol_abs:
            tol_abs, note = floor, f"ill-conditioned: one ulp in x moves y by {slope * math.ulp(value):.2e}"
        report.results.append(residual(f"trig.round_trip[{family.value}]", back, args.y, tol_abs, cfg.tol_rel or 0.0, note))
    else:
        if args.x is None:
            raise ValueError("need --x (or --inverse with --y)")
        value = arc_integral(family, order, args.x, tol)
        report.values.append({"family": ARC_NAMES[family], "k": args.k, "n": args.n, "input": args.x, "value": value})
    return report


def cmd_verify(args, cfg: RunConfig, tol: ToleranceConfig) -> Report:
    results = run_suite(cfg.suite, cfg.seed, tol)
    if cfg.tol_abs is not None or cfg.tol_rel is not None:
        results = [r.with_tolerance(cfg.tol_abs or 0.0, cfg.tol_rel or 0.0) for r in results]
    return Report(cfg, results)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, help="set both --tol-abs and --tol-rel")
    common.add_argument("--tol-abs", type=float)
    common.add_argument("--tol-rel", type=float)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--output", metavar="PATH")
    common.add_argument("--seed", type=int, default=42)

    p = argparse.ArgumentParser(prog="hypergamma", description="Hyperelliptic constants, Gamma values and identity checks.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("constants", parents=[common], help="pi_n by one or all methods")
    c.add_argument("--n", default="2..8", help="'4', '2..8' or '2,3,5' (1..64)")
    c.add_argument("--method", choices=[m.value for m in Method] + ["all"], default="all")

    g = sub.add_parser("gamma", parents=[common], help="Gamma at a rational argument")
    g.add_argument("--arg", required=True, help="p/q")
    g.add_argument("--routes", default="reference,closed", help=f"comma list of {','.join(GAMMA_ROUTES)}")

    t = sub.add_parser("trig", parents=[common], help="hyperelliptic arc integrals and their inverses")
    t.add_argument("--family", required=True, help="s/arcs, c/arcc, sh/arsh, ch/arch")
    t.add_argument("--k", type=int, default=2)
    t.add_argument("--n", type=int, default=2)
    t.add_argument("--x", type=float)
    t.add_argument("--y", type=float)
    t.add_argument("--inverse", action="store_true")

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", choices=SUITE_NAMES, default="all")
    return p


COMMANDS = {"constants": cmd_constants, "gamma": cmd_gamma, "trig": cmd_trig, "verify": cmd_verify}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        tol_abs = args.tol_abs if args.tol_abs is not None else args.tol
        tol_rel = args.tol_rel if args.tol_rel is not None else args.tol
        cfg = RunConfig(args.command, getattr(args, "suite", None), tol_abs, tol_rel, args.format, args.seed, args.output)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", AccuracyWarning)
            report = COMMANDS[args.command](args, cfg, kernel_tolerance())
    except (HypergammaError, ValueError, ZeroDivisionError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report.wall_time = time.perf_counter() - start
    text = RENDERERS[cfg.format](report)
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
