"""Deformation parameter and q-number arithmetic.

Both regimes are parameterised by a real ``w``: ``q = exp(w)`` on the
positive real axis and ``q = exp(i w)`` on the unit circle.  The q-number
``[x]_q = (q**x - q**-x) / (q - 1/q)`` is then ``sinh(x w) / sinh(w)`` or
``sin(x w) / sin(w)``, both real.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .exceptions import ParameterDomainError

__all__ = [
    "Regime",
    "DeformationParameter",
    "W_SWITCH",
    "EPS_DENOM",
    "q_number",
    "q_number_w",
    "q_power",
]

# Below this |w| the q-number is taken from its Taylor series.
W_SWITCH = 1e-4
# Minimum |sin w| accepted on the unit circle (keeps away from q = -1, 1).
EPS_DENOM = 1e-12


class Regime(enum.Enum):
    REAL_POSITIVE = "real"
    UNIT_CIRCLE = "circle"

    @property
    def sign(self) -> int:
        """+1 for the hyperbolic regime, -1 for the trigonometric one."""
        return 1 if self is Regime.REAL_POSITIVE else -1


@dataclass(frozen=True)
class DeformationParameter:
    """A validated deformation ``q = exp(w)`` or ``q = exp(i w)``.

    Parameters
    ----------
    regime : Regime
        Which branch of q values is meant.
    w : float
        Real deformation strength.  ``0 < w`` on the real axis,
        ``0 < w < pi`` on the unit circle.
    """

    regime: Regime
    w: float

    def __post_init__(self):
        if not isinstance(self.regime, Regime):
            raise ParameterDomainError(f"unknown regime {self.regime!r}")
        w = float(self.w)
        if not math.isfinite(w):
            raise ParameterDomainError(f"w must be finite, got {w!r}")
        if self.regime is Regime.REAL_POSITIVE:
            if not w > 0.0:
                raise ParameterDomainError(f"real regime requires w > 0, got {w!r}")
        else:
            if not 0.0 < w < math.pi:
                raise ParameterDomainError(f"circle regime requires 0 < w < pi, got {w!r}")
            if abs(math.sin(w)) <= EPS_DENOM:
                raise ParameterDomainError(f"w={w!r} is too close to a root of unity")
        object.__setattr__(self, "w", w)

    @classmethod
    def real(cls, w: float) -> "DeformationParameter":
        return cls(Regime.REAL_POSITIVE, w)

    @classmethod
    def circle(cls, w: float) -> "DeformationParameter":
        return cls(Regime.UNIT_CIRCLE, w)

    @property
    def q(self) -> complex:
        return q_power(1.0, self)

    def with_w(self, w: float) -> "DeformationParameter":
        return DeformationParameter(self.regime, w)


def _series(x: float, w: float, sign: int) -> float:
    # sinh(xw)/sinh(w) = x + x(x^2-1) w^2/6 + x(x^2-1)(3x^2-7) w^4/360 + ...
    # the circle regime is the same series at w -> i w.
    w2 = sign * w * w
    x2 = x * x
    return x * (1.0 + (x2 - 1.0) * w2 / 6.0 * (1.0 + (3.0 * x2 - 7.0) * w2 / 60.0))


def _log_sinh(t: float) -> float:
    if t > 20.0:
        return t - math.log(2.0) + math.log1p(-math.exp(-2.0 * t))
    return math.log(math.sinh(t))


def q_number_w(x: float, w: float, regime: Regime) -> float:
    """Evaluate ``[x]_q`` for a raw ``w`` without domain validation.

    Negative ``w`` is accepted, which is what the ``q -> 1/q`` reflection
    checks need.
    """
    if w == 0.0:
        return float(x)
    if abs(w) < W_SWITCH:
        return _series(x, w, regime.sign)
    if regime is Regime.REAL_POSITIVE:
        xw = x * w
        # sinh overflows near 710; take the ratio in log space there.
        if abs(xw) > 700.0 or abs(w) > 700.0:
            if x == 0.0:
                return 0.0
            log_ratio = _log_sinh(abs(xw)) - _log_sinh(abs(w))
            magnitude = math.inf if log_ratio > 709.0 else math.exp(log_ratio)
            return math.copysign(magnitude, x)
        return math.sinh(xw) / math.sinh(w)
    return math.sin(x * w) / math.sin(w)


def q_number(x: float, p: DeformationParameter) -> float:
    """q-number ``[x]_q`` of a real (possibly half-integer) ``x``.

    Examples
    --------
    >>> q_number(2.0, DeformationParameter.real(math.log(2.0)))
    2.5
    """
    if not isinstance(p, DeformationParameter):
        raise ParameterDomainError(f"expected a DeformationParameter, got {type(p).__name__}")
    return q_number_w(float(x), p.w, p.regime)


def q_power(x: float, p: DeformationParameter) -> complex:
    """``q**x``: ``exp(x w)`` on the real axis, ``exp(i x w)`` on the circle."""
    if not isinstance(p, DeformationParameter):
        raise ParameterDomainError(f"expected a DeformationParameter, got {type(p).__name__}")
    if p.regime is Regime.REAL_POSITIVE:
        return complex(math.exp(x * p.w), 0.0)
    return cmath.exp(1j * x * p.w)
