"""Self-verification suite behind ``suqosc verify``.

Every check compares an implementation path with an independent route
(closed forms, quadrature, operator algebra, finite differences) and
reports the worst residual against a fixed tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import algebra, casimir, deform, quadrupole, radial, spectrum
from .casimir import CasimirKind, RootVariant
from .deform import DeformationParameter, Regime
from .spectrum import Branch

__all__ = ["CheckResult", "SUITES", "run_suite"]


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    residual: float
    tolerance: float
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and bool(self.residual <= self.tolerance)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  {self.suite + '.' + self.name:<40s} residual={self.residual:.3e}  tol={self.tolerance:.1e}"
        return text if self.error is None else f"{text}  error={self.error}"


# Bound on the w^4 remainder of the small-w quadrupole law.
SMALL_W_K = 0.05


def _path_grid(regime: Regime, count: int = 120) -> np.ndarray:
    if regime is Regime.REAL_POSITIVE:
        return np.linspace(0.01, 4.0, count)
    return np.linspace(0.01, 3.1, count)


# ---------------------------------------------------------------- deform


def _deform_examples():
    p2 = DeformationParameter.real(math.log(2.0))
    pc = DeformationParameter.circle(math.pi / 3)
    err = max(
        abs(deform.q_number(2.0, p2) - 2.5),
        abs(deform.q_number(3.0, pc)),
        abs(deform.q_number(1.0, pc) - 1.0),
        abs(deform.q_power(1.0, p2) - 2.0),
        abs(deform.q_power(2.0, DeformationParameter.circle(math.pi / 2)) + 1.0),
    )
    return err, 1e-13


def _deform_symmetries():
    worst = 0.0
    for regime in Regime:
        for w in (1e-5, 1e-3, 0.3, 1.0, 2.5):
            for x in (-3.5, -1.0, 0.5, 2.0, 4.5):
                a = deform.q_number_w(x, w, regime)
                worst = max(worst, abs(a + deform.q_number_w(-x, w, regime)))
                worst = max(worst, abs(a - deform.q_number_w(x, -w, regime)))
    return worst, 1e-13


def _deform_switch_continuity():
    worst = 0.0
    ws = deform.W_SWITCH
    for regime in Regime:
        for x in (0.5, 1.5, 2.0, 6.5):
            below = deform.q_number_w(x, ws * (1 - 1e-9), regime)
            above = deform.q_number_w(x, ws * (1 + 1e-9), regime)
            worst = max(worst, abs(below - above))
    return worst, 1e-12


# ---------------------------------------------------------------- casimir


def _casimir_root_residuals():
    worst = 0.0
    for regime in Regime:
        for w in _path_grid(regime, 40):
            p = DeformationParameter(regime, w)
            for kind in CasimirKind:
                for l in range(7):
                    cls = casimir.classify_level(l, kind, p)
                    for a in cls.roots:
                        if cls.variant is not RootVariant.DOUBLE_HALF:
                            worst = max(worst, abs(a * (a - 1.0) - cls.c) / max(1.0, abs(cls.c)))
    return worst, 1e-12


def _casimir_thresholds():
    lo, hi = spectrum.COS_W_CQ_L1
    found = [
        (casimir.classification_boundary(1, CasimirKind.CQ, -0.45, -0.1), hi),
        (casimir.classification_boundary(1, CasimirKind.CQ, -0.9, -0.55), lo),
        (casimir.classification_boundary(1, CasimirKind.CQ_PRIME, -0.3, -0.05), -0.125),
        (casimir.classification_boundary(1, CasimirKind.CQ_PRIME, -0.05, 0.3), 0.0),
    ]
    return max(abs(a - b) for a, b in found), 1e-10


# ---------------------------------------------------------------- spectrum


def _same_levels(a, b) -> float:
    """Largest energy gap between two level lists, relative to ``max(1, |E|)``."""
    if [x.branch for x in a] != [y.branch for y in b]:
        return math.inf
    return max((abs(x.energy - y.energy) / max(1.0, abs(x.energy)) for x, y in zip(a, b)), default=0.0)


def _spectrum_path_equivalence():
    worst = 0.0
    for regime in Regime:
        lmax = 6 if regime is Regime.REAL_POSITIVE else 1
        for w in _path_grid(regime):
            p = DeformationParameter(regime, w)
            for kind in CasimirKind:
                for l in range(lmax + 1):
                    for n in (0, 3):
                        worst = max(worst, _same_levels(spectrum.energy(n, l, kind, p), spectrum.closed_form_energy(n, l, kind, p)))
    return worst, 1e-10


def _spectrum_undeformed_limit():
    worst = 0.0
    for regime in Regime:
        p = DeformationParameter(regime, 1e-8)
        for kind in CasimirKind:
            levels = spectrum.enumerate_levels(math.inf, 6, 6, kind, p)
            for lev in levels:
                worst = max(worst, abs(lev.energy - (2 * lev.n + lev.l + 1.5)))
            for shell in range(7):
                members = [lev for lev in levels if 2 * lev.n + lev.l == shell]
                worst = max(worst, abs(spectrum.weighted_count(members) - (shell + 1) * (shell + 2) // 2))
    return worst, 1e-6


def _spectrum_monotonicity():
    worst = 0.0
    for w0 in (0.01, 0.05, 0.1):
        for l in (1, 2):
            for kind in CasimirKind:
                for regime, sign in ((Regime.REAL_POSITIVE, 1), (Regime.UNIT_CIRCLE, -1)):
                    probe = spectrum.monotonicity_probe(0, l, kind, regime, w0)
                    if probe[Branch.ONLY].sign != sign:
                        worst = math.inf
        for regime in Regime:
            probe = spectrum.monotonicity_probe(0, 0, CasimirKind.CQ_PRIME, regime, w0)
            worst = max(worst, abs(probe[Branch.ONLY].derivative))
    return worst, 1e-12


# ---------------------------------------------------------------- radial


_LATTICE_ALPHAS = (0.1, 0.9, 1.0, 2.5, 15.0)


def _radial_normalization():
    worst = 0.0
    for n in range(11):
        for a in _LATTICE_ALPHAS:
            worst = max(worst, abs(radial.normalization_integral(radial.RadialState(n, a)).value - 1.0))
    return worst, 1e-8


def _radial_r2():
    worst = 0.0
    for n in range(11):
        for a in _LATTICE_ALPHAS:
            st = radial.RadialState(n, a)
            worst = max(worst, abs(radial.r2_integral(st).value - radial.expectation_r2(st)))
    return worst, 1e-8


def _radial_ode():
    worst = 0.0
    for regime, ws in ((Regime.REAL_POSITIVE, (0.1, 0.7, 1.5, 2.5)), (Regime.UNIT_CIRCLE, (0.1, 0.7, 1.5, 2.5))):
        for w in ws:
            p = DeformationParameter(regime, w)
            for kind in CasimirKind:
                for l in range(4):
                    c = casimir.casimir_eigenvalue(l, kind, p)
                    for n in (0, 2, 5):
                        for lev in spectrum.energy(n, l, kind, p):
                            st = radial.RadialState(n, lev.alpha)
                            worst = max(worst, radial.ode_residual(st, lev.energy, c))
    return worst, 1e-9


# ---------------------------------------------------------------- algebra


def _algebra_lattice(fn: Callable[[float, int, DeformationParameter], float]) -> float:
    worst = 0.0
    for regime in Regime:
        for w in algebra.default_w_lattice(regime):
            p = DeformationParameter(regime, w)
            for s in algebra.DEFAULT_S_LATTICE:
                for m in algebra.DEFAULT_M_LATTICE:
                    worst = max(worst, fn(s, m, p))
    return worst


def _algebra_commutators():
    return _algebra_lattice(lambda s, m, p: max(algebra.commutator_residuals(s, m, p))), 1e-12


def _algebra_casimir_invariance():
    return (
        _algebra_lattice(
            lambda s, m, p: max(algebra.casimir_invariance_residual(s, m, k, p) for k in CasimirKind)
        ),
        1e-12,
    )


# ---------------------------------------------------------------- quadrupole


def _quadrupole_evenness():
    worst = 0.0
    for regime in Regime:
        for w in np.linspace(1e-3, 3.0, 60):
            worst = max(worst, abs(quadrupole.angular_factor_w(w, regime) - quadrupole.angular_factor_w(-w, regime)))
    return worst, 1e-13


def _quadrupole_small_w():
    # |A - (+-4/15) w^2| <= K w^4 on [1e-3, 1e-1]; K ~ 4/105 from the next series term.
    worst = 0.0
    for regime in Regime:
        for w in np.geomspace(1e-3, 1e-1, 25):
            lead = regime.sign * 4.0 / 15.0 * w * w
            worst = max(worst, abs(quadrupole.angular_factor_w(w, regime) - lead) / w**4)
    return worst, SMALL_W_K


def _quadrupole_signs():
    bad = 0
    for regime, grid, sign in (
        (Regime.REAL_POSITIVE, np.linspace(0.1, 3.0, 60), 1),
        (Regime.UNIT_CIRCLE, np.linspace(0.1, 2.5, 60), -1),
    ):
        for kind in CasimirKind:
            points = quadrupole.quadrupole_sweep(grid, 0, kind, regime)
            series: dict[Branch, list[float]] = {}
            for pt in points:
                for r in pt.results:
                    series.setdefault(r.branch, []).append(r.Q)
            for values in series.values():
                q = np.array(values)
                bad += int(np.sum(sign * q <= 0)) + int(np.sum(sign * np.diff(q) <= 0))
    return float(bad), 0.0


SUITES: dict[str, list[tuple[str, Callable[[], tuple[float, float]]]]] = {
    "deform": [
        ("examples", _deform_examples),
        ("antisymmetry_reflection", _deform_symmetries),
        ("series_switch_continuity", _deform_switch_continuity),
    ],
    "casimir": [
        ("root_residuals", _casimir_root_residuals),
        ("l1_circle_thresholds", _casimir_thresholds),
    ],
    "spectrum": [
        ("path_equivalence", _spectrum_path_equivalence),
        ("undeformed_limit_degeneracy", _spectrum_undeformed_limit),
        ("monotonicity_near_q1", _spectrum_monotonicity),
    ],
    "radial": [
        ("normalization", _radial_normalization),
        ("r2_expectation", _radial_r2),
        ("ode_residual", _radial_ode),
    ],
    "algebra": [
        ("commutators", _algebra_commutators),
        ("casimir_invariance", _algebra_casimir_invariance),
    ],
    "quadrupole": [
        ("evenness", _quadrupole_evenness),
        ("small_w_law", _quadrupole_small_w),
        ("sign_monotonicity", _quadrupole_signs),
    ],
}


def run_suite(selector: str = "all", tolerances: dict[str, float] | None = None) -> list[CheckResult]:
    """Run one named suite (or ``"all"``) in a fixed order.

    ``tolerances`` maps ``"suite.check"`` names to replacement tolerances.
    """
    names = list(SUITES) if selector == "all" else [selector]
    for suite in names:
        if suite not in SUITES:
            raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(['all', *SUITES])}")
    overrides = dict(tolerances or {})
    known = {f"{suite}.{name}" for suite, checks in SUITES.items() for name, _ in checks}
    unknown = sorted(set(overrides) - known)
    if unknown:
        raise KeyError(f"unknown check(s) {', '.join(unknown)}")
    out = []
    for suite in names:
        for name, fn in SUITES[suite]:
            try:
                residual, tol = fn()
                error = None
            except Exception as exc:  # a crashing check is a failed check
                residual, tol, error = math.inf, 0.0, f"{type(exc).__name__}: {exc}"
            tol = overrides.get(f"{suite}.{name}", tol)
            out.append(CheckResult(suite, name, float(residual), float(tol), error))
    return out
