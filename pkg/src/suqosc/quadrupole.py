"""Quadrupole moment ``<n00| 3z^2 - r^2 |n00>_q`` of the l = 0 states.

The moment factorises into the radial ``<r^2> = 2n + alpha_0 + 1/2`` and
the angular matrix element of ``3 cos^2(theta) - 1`` in the deformed
scalar product:

    real axis:    (2 cosh^2 w + 1) / sinh^2 w - 3 cosh w / (w sinh w)
    unit circle: -(2 cos^2 w + 1) / sin^2 w  + 3 cos w  / (w sin w)

The undeformed value is zero, so any nonzero result measures the
deformation directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .casimir import CasimirKind
from .deform import DeformationParameter, Regime
from .exceptions import BranchNotAdmissibleError
from .radial import RadialState, expectation_r2
from .spectrum import Branch, energy

__all__ = [
    "QuadrupoleResult",
    "SweepPoint",
    "ANGULAR_SERIES",
    "W_SERIES",
    "angular_factor",
    "angular_factor_w",
    "angular_closed_form",
    "quadrupole_moment",
    "quadrupole_sweep",
]

# Taylor coefficients of the real-axis angular factor in powers w^2, w^4, ...
ANGULAR_SERIES = tuple(
    Fraction(c)
    for c in (
        "4/15",
        "-4/105",
        "8/1575",
        "-4/6237",
        "5528/70945875",
        "-8/868725",
        "57872/54273594375",
        "-175468/1443677610375",
        "1396888/102088631019375",
        "-621464/407510816383125",
        "3781825456/22435507995972946875",
        "-5263448/284473896821296875",
    )
)
_SERIES_FLOATS = tuple(float(c) for c in ANGULAR_SERIES)

# Below this |w| the closed form loses more digits than the series truncation.
W_SERIES = 0.5


def angular_closed_form(w: float, regime: Regime) -> float:
    """The angular factor evaluated literally; cancels badly for small ``w``."""
    if regime is Regime.REAL_POSITIVE:
        ch, sh = math.cosh(w), math.sinh(w)
        return (2.0 * ch * ch + 1.0) / (sh * sh) - 3.0 * ch / (w * sh)
    c, s = math.cos(w), math.sin(w)
    return -(2.0 * c * c + 1.0) / (s * s) + 3.0 * c / (w * s)


def angular_factor_w(w: float, regime: Regime) -> float:
    """Angular factor for a raw ``w`` (either sign), no domain validation."""
    if w == 0.0:
        return 0.0
    if abs(w) < W_SERIES:
        # w -> i w maps the real-axis series onto the unit-circle one
        u = w * w * regime.sign
        total = 0.0
        for c in reversed(_SERIES_FLOATS):
            total = total * u + c
        return total * u
    return angular_closed_form(w, regime)


def angular_factor(p: DeformationParameter) -> float:
    """``<00| 3 cos^2(theta) - 1 |00>_q``; even in ``w``, ``~ +-(4/15) w^2`` near 0."""
    return angular_factor_w(p.w, p.regime)


@dataclass(frozen=True)
class QuadrupoleResult:
    n: int
    branch: Branch
    alpha: float
    angular_factor: float
    radial_factor: float
    Q: float
    regime: Regime
    w: float
    kind: CasimirKind

    def as_dict(self) -> dict:
        return {
            "w": self.w,
            "n": self.n,
            "branch": self.branch.value,
            "alpha": self.alpha,
            "angular": self.angular_factor,
            "radial": self.radial_factor,
            "Q": self.Q,
        }


def quadrupole_moment(n: int, branch: Branch, kind: CasimirKind, p: DeformationParameter) -> QuadrupoleResult:
    """Quadrupole moment of ``|n 0 0>_q`` on the given root branch."""
    kind = CasimirKind(kind)
    branch = Branch(branch)
    levels = {lev.branch: lev for lev in energy(n, 0, kind, p)}
    if branch not in levels:
        have = ", ".join(b.value for b in levels) or "none"
        raise BranchNotAdmissibleError(f"branch {branch.value!r} not admissible for l=0 (available: {have})")
    alpha = levels[branch].alpha
    ang = angular_factor(p)
    rad = expectation_r2(RadialState(n, alpha))
    return QuadrupoleResult(n, branch, alpha, ang, rad, ang * rad, p.regime, p.w, kind)


@dataclass(frozen=True)
class SweepPoint:
    w: float
    results: tuple[QuadrupoleResult, ...]
    absent: tuple[Branch, ...]


def quadrupole_sweep(wgrid, n: int, kind: CasimirKind, regime: Regime) -> list[SweepPoint]:
    """Quadrupole moments of every l = 0 branch along ``wgrid``.

    Branches present somewhere on the grid but missing at a point are
    listed in that point's ``absent`` field rather than reported as zero.
    """
    kind = CasimirKind(kind)
    raw = []
    for w in wgrid:
        p = DeformationParameter(regime, float(w))
        raw.append((p.w, [quadrupole_moment(n, lev.branch, kind, p) for lev in energy(n, 0, kind, p)]))
    seen = {r.branch for _, results in raw for r in results}
    points = []
    for w, results in raw:
        present = {r.branch for r in results}
        absent = tuple(sorted(seen - present, key=lambda b: b.rank))
        points.append(SweepPoint(w, tuple(results), absent))
    return points
