"""Bound-state spectrum of the su_q(2)-invariant oscillator.

Energies are ``E = 2n + alpha + 1/2`` for every admissible root ``alpha``
of the alpha-equation.  Two independent routes are provided:
:func:`energy` goes through the generic root classification, while
:func:`closed_form_energy` evaluates the explicit per-case formulas.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .casimir import EPS_CLASS, CasimirKind, RootVariant, classify_level
from .deform import DeformationParameter, Regime
from .exceptions import BranchDisappearedError, UnsupportedCaseError

__all__ = [
    "Branch",
    "Level",
    "ProbeResult",
    "energy",
    "closed_form_energy",
    "enumerate_levels",
    "degeneracy_report",
    "weighted_count",
    "monotonicity_probe",
    "COS_W_CQ_L1",
    "COS_W_CQPRIME_L1",
]

# Case boundaries on cos(w) for l = 1 on the unit circle.
COS_W_CQ_L1 = ((-7.0 - math.sqrt(17.0)) / 16.0, (-7.0 + math.sqrt(17.0)) / 16.0)
COS_W_CQPRIME_L1 = (-1.0 / 8.0, 0.0)


class Branch(enum.Enum):
    MINUS = "minus"
    DOUBLE = "double"
    ONLY = "only"
    PLUS = "plus"

    @property
    def rank(self) -> int:
        return _BRANCH_RANK[self]


_BRANCH_RANK = {Branch.MINUS: 0, Branch.DOUBLE: 1, Branch.ONLY: 2, Branch.PLUS: 3}


@dataclass(frozen=True)
class Level:
    n: int
    l: int
    branch: Branch
    alpha: float
    energy: float

    @property
    def sort_key(self) -> tuple:
        return (self.energy, self.l, self.n, self.branch.rank)

    def as_dict(self) -> dict:
        return {"n": self.n, "l": self.l, "branch": self.branch.value, "alpha": self.alpha, "energy": self.energy}


def _level(n: int, l: int, branch: Branch, alpha: float) -> Level:
    return Level(n, l, branch, alpha, 2 * n + alpha + 0.5)


def _branches(variant: RootVariant) -> tuple[Branch, ...]:
    return {
        RootVariant.TWO_ROOTS: (Branch.MINUS, Branch.PLUS),
        RootVariant.ONE_ROOT: (Branch.ONLY,),
        RootVariant.DOUBLE_HALF: (Branch.DOUBLE,),
        RootVariant.NO_ROOT: (),
    }[variant]


def energy(n: int, l: int, kind: CasimirKind, p: DeformationParameter) -> list[Level]:
    """All levels with quantum numbers ``(n, l)``, lowest energy first.

    An empty list means no admissible root exists.
    """
    if n < 0 or int(n) != n:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    cls = classify_level(l, kind, p)
    return [_level(n, l, b, a) for b, a in zip(_branches(cls.variant), cls.roots)]


def _from_offset(n: int, l: int, offset: float, split: bool) -> list[Level]:
    """Levels ``2n + 1 +- offset`` (``alpha = 1/2 +- offset``)."""
    if split:
        return [_level(n, l, Branch.MINUS, 0.5 - offset), _level(n, l, Branch.PLUS, 0.5 + offset)]
    return [_level(n, l, Branch.ONLY, 0.5 + offset)]


def closed_form_energy(n: int, l: int, kind: CasimirKind, p: DeformationParameter) -> list[Level]:
    """Levels from the explicit formulas, including their case splits.

    Covers every ``l`` on the real axis and ``l`` in {0, 1} on the unit
    circle.  Raises :class:`UnsupportedCaseError` otherwise.
    """
    kind = CasimirKind(kind)
    w = p.w
    if p.regime is Regime.REAL_POSITIVE:
        if kind is CasimirKind.CQ:
            if l == 0:
                return _from_offset(n, 0, 1.0 / (2.0 * math.cosh(w / 2.0)), split=True)
            return _from_offset(n, l, math.sinh((l + 0.5) * w) / math.sinh(w), split=False)
        sw = math.sinh(w)
        offset = math.sqrt(4.0 * math.sinh(l * w) * math.sinh((l + 1) * w) + sw * sw) / (2.0 * sw)
        return _from_offset(n, l, offset, split=False)

    cw = math.cos(w)
    if l == 0:
        if kind is CasimirKind.CQ:
            return _from_offset(n, 0, 1.0 / (2.0 * math.cos(w / 2.0)), split=False)
        return [_level(n, 0, Branch.ONLY, 1.0)]
    if l != 1:
        raise UnsupportedCaseError(f"no closed form for l={l} on the unit circle")

    if kind is CasimirKind.CQ:
        ch = math.cos(w / 2.0)
        offset = (4.0 * ch * ch - 1.0) / (2.0 * ch)
        lo, hi = COS_W_CQ_L1
        if lo < cw < hi:
            if abs(offset) <= EPS_CLASS:
                return [_level(n, 1, Branch.DOUBLE, 0.5)]
            return _from_offset(n, 1, abs(offset), split=True)
        # the single admissible root is 1/2 + |offset|; offset < 0 when cos w <= lo
        return _from_offset(n, 1, abs(offset), split=False)

    lo, hi = COS_W_CQPRIME_L1
    if cw < lo:
        return []
    if cw == lo:
        return [_level(n, 1, Branch.DOUBLE, 0.5)]
    return _from_offset(n, 1, 0.5 * math.sqrt(1.0 + 8.0 * cw), split=cw < hi)


def enumerate_levels(
    emax: float, nmax: int, lmax: int, kind: CasimirKind, p: DeformationParameter
) -> list[Level]:
    """Every level with ``energy <= emax``, ``n <= nmax`` and ``l <= lmax``.

    Sorted by ``(energy, l, n, branch)``.
    """
    if not emax > 0:
        raise ValueError("emax must be positive")
    levels = [
        lev
        for l in range(lmax + 1)
        for n in range(nmax + 1)
        for lev in energy(n, l, kind, p)
        if lev.energy <= emax
    ]
    return sorted(levels, key=lambda lev: lev.sort_key)


def degeneracy_report(levels: list[Level], tol_e: float = 1e-9) -> list[list[Level]]:
    """Group sorted levels into clusters of (near-)equal energy.

    Neighbouring levels closer than ``tol_e`` land in the same cluster.
    """
    clusters: list[list[Level]] = []
    for lev in levels:
        if clusters and lev.energy - clusters[-1][-1].energy <= tol_e:
            clusters[-1].append(lev)
        else:
            clusters.append([lev])
    return clusters


def weighted_count(levels) -> int:
    """Number of states counting each level with its ``2l + 1`` m-degeneracy."""
    return sum(2 * lev.l + 1 for lev in levels)


@dataclass(frozen=True)
class ProbeResult:
    branch: Branch
    derivative: float
    sign: int


def monotonicity_probe(
    n: int,
    l: int,
    kind: CasimirKind,
    regime: Regime,
    w0: float,
    dw: float = 1e-3,
    zero_tol: float = 1e-12,
) -> dict[Branch, ProbeResult]:
    """Sign of ``dE/dw`` at ``w0`` for every branch of ``(n, l)``.

    Central differences at ``dw`` and ``dw/2`` combined by Richardson
    extrapolation.  Raises :class:`BranchDisappearedError` if the set of
    branches is not the same on the whole stencil.
    """
    offsets = (-dw, -dw / 2.0, 0.0, dw / 2.0, dw)
    samples = {}
    for h in offsets:
        levels = energy(n, l, kind, DeformationParameter(regime, w0 + h))
        samples[h] = {lev.branch: lev.energy for lev in levels}
    branch_sets = {frozenset(s) for s in samples.values()}
    if len(branch_sets) != 1:
        raise BranchDisappearedError(f"branches of (n={n}, l={l}) change between w={w0 - dw} and w={w0 + dw}")

    out = {}
    for b in samples[0.0]:
        d_h = (samples[dw][b] - samples[-dw][b]) / (2.0 * dw)
        d_h2 = (samples[dw / 2.0][b] - samples[-dw / 2.0][b]) / dw
        deriv = (4.0 * d_h2 - d_h) / 3.0
        sign = 0 if abs(deriv) <= zero_tol else (1 if deriv > 0 else -1)
        out[b] = ProbeResult(b, deriv, sign)
    return out
