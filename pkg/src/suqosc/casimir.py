"""Casimir eigenvalues and admissibility of the alpha-equation roots.

The radial exponent ``alpha`` of a state with angular label ``l`` solves
``alpha * (alpha - 1) = c`` where ``c`` is the eigenvalue of whichever
su_q(2) Casimir is chosen.  Only strictly positive real roots are kept.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .deform import DeformationParameter, Regime, q_number
from .exceptions import RegimeError

__all__ = [
    "CasimirKind",
    "RootVariant",
    "RootClassification",
    "EPS_CLASS",
    "casimir_eigenvalue",
    "gamma_quantity",
    "classify_roots",
    "classify_level",
    "alpha_discriminant",
    "classification_boundary",
]

EPS_CLASS = 1e-12


class CasimirKind(enum.Enum):
    """``CQ``: ``J+J- + [J3 - 1/2]_q^2 - 1/4``; ``CQ_PRIME``: ``J+J- + [J3]_q [J3 - 1]_q``."""

    CQ = "cq"
    CQ_PRIME = "cqprime"


class RootVariant(enum.Enum):
    TWO_ROOTS = "two"
    ONE_ROOT = "one"
    DOUBLE_HALF = "double"
    NO_ROOT = "none"


@dataclass(frozen=True)
class RootClassification:
    """Admissible roots of ``alpha (alpha - 1) = c``.

    ``alpha_minus`` is only set for ``TWO_ROOTS``; ``alpha_plus`` is set for
    every variant except ``NO_ROOT`` (it is 1/2 for ``DOUBLE_HALF``).
    """

    variant: RootVariant
    c: float
    alpha_plus: float | None = None
    alpha_minus: float | None = None

    @property
    def roots(self) -> tuple[float, ...]:
        """Admissible roots in ascending order."""
        if self.variant is RootVariant.TWO_ROOTS:
            return (self.alpha_minus, self.alpha_plus)
        if self.variant is RootVariant.NO_ROOT:
            return ()
        return (self.alpha_plus,)

    @property
    def count(self) -> int:
        return len(self.roots)


def casimir_eigenvalue(l: int, kind: CasimirKind, p: DeformationParameter) -> float:
    """Eigenvalue of the chosen Casimir on the angular multiplet ``l``.

    For ``CQ`` this is ``[l + 1/2]_q**2 - 1/4`` and for ``CQ_PRIME`` it is
    ``[l]_q [l + 1]_q``; both reduce to ``l (l + 1)`` at ``q = 1``.
    """
    if l < 0 or int(l) != l:
        raise ValueError(f"l must be a non-negative integer, got {l!r}")
    kind = CasimirKind(kind)
    if kind is CasimirKind.CQ:
        h = q_number(l + 0.5, p)
        return h * h - 0.25
    return q_number(l, p) * q_number(l + 1, p)


def gamma_quantity(l: int, kind: CasimirKind, p: DeformationParameter) -> float:
    """``4 sin(w)**2 * C(l)``, the quantity whose sign decides the circle-regime branches."""
    if p.regime is not Regime.UNIT_CIRCLE:
        raise RegimeError("gamma_quantity is only defined on the unit circle")
    return 4.0 * math.sin(p.w) ** 2 * casimir_eigenvalue(l, kind, p)


def alpha_discriminant(l: int, kind: CasimirKind, p: DeformationParameter) -> float:
    """``1/4 + C(l)`` evaluated without cancellation.

    For ``CQ`` this is ``[l + 1/2]_q**2``, which stays resolvable where
    ``C(l)`` itself rounds to ``-1/4``.
    """
    kind = CasimirKind(kind)
    if kind is CasimirKind.CQ:
        h = q_number(l + 0.5, p)
        return h * h
    return 0.25 + casimir_eigenvalue(l, kind, p)


def classify_roots(c: float, disc: float | None = None) -> RootClassification:
    """Classify the positive real roots of ``alpha**2 - alpha - c = 0``.

    ``disc`` is ``1/4 + c`` when the caller can supply it more accurately
    than the sum.  Roots closer than ``EPS_CLASS`` to each other (or to
    the real axis) are merged, i.e. ``|disc| <= EPS_CLASS**2`` is the
    double root ``1/2``.  A vanishing root (``c >= -EPS_CLASS``) is not
    admissible.
    """
    c = float(c)
    disc = 0.25 + c if disc is None else float(disc)
    if not (math.isfinite(c) and math.isfinite(disc)):
        raise ValueError(f"Casimir eigenvalue must be finite, got {c!r}")
    if abs(disc) <= EPS_CLASS * EPS_CLASS:
        return RootClassification(RootVariant.DOUBLE_HALF, c, alpha_plus=0.5)
    if disc < 0.0:
        return RootClassification(RootVariant.NO_ROOT, c)
    s = math.sqrt(disc)
    alpha_plus = 0.5 + s
    if c < -EPS_CLASS:
        # alpha_minus = 1/2 - s loses digits when s ~ 1/2; -c / alpha_plus does not.
        alpha_minus = -c / alpha_plus
        return RootClassification(RootVariant.TWO_ROOTS, c, alpha_plus=alpha_plus, alpha_minus=alpha_minus)
    return RootClassification(RootVariant.ONE_ROOT, c, alpha_plus=alpha_plus)


def classify_level(l: int, kind: CasimirKind, p: DeformationParameter) -> RootClassification:
    """Root classification for angular label ``l`` with the accurate discriminant."""
    return classify_roots(casimir_eigenvalue(l, kind, p), alpha_discriminant(l, kind, p))


def classification_boundary(
    l: int,
    kind: CasimirKind,
    cos_a: float,
    cos_b: float,
    tol: float = 1e-13,
) -> float:
    """Bisect for the ``cos w`` at which the unit-circle root variant changes.

    ``cos_a`` and ``cos_b`` must bracket exactly one change of variant.
    """

    def variant(cw: float) -> RootVariant:
        p = DeformationParameter(Regime.UNIT_CIRCLE, math.acos(cw))
        return classify_level(l, kind, p).variant

    lo, hi = float(cos_a), float(cos_b)
    v_lo, v_hi = variant(lo), variant(hi)
    if v_lo is v_hi:
        raise ValueError(f"no change of root variant between cos w = {lo} and {hi}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        v_mid = variant(mid)
        if v_mid is v_lo:
            lo = mid
        elif v_mid is v_hi:
            hi = mid
        else:
            # a third variant inside the bracket (DOUBLE_HALF deadband): it is the boundary
            return mid
    return 0.5 * (lo + hi)
