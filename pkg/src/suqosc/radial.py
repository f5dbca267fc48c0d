"""Radial wave functions of the deformed oscillator and their oracles.

With hbar = mu = omega = 1 the radial solutions are

    R(r) = N exp(-r**2 / 2) r**(alpha - 1) L_n^(alpha - 1/2)(r**2),
    N**2 = 2 n! / Gamma(alpha + n + 1/2),

where ``alpha`` is an admissible root of ``alpha (alpha - 1) = c``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .exceptions import ParameterDomainError
from .quadrature import QuadratureMethod, QuadratureResult, QuadratureSpec, quadrature

__all__ = [
    "RadialState",
    "QuadratureMethod",
    "QuadratureSpec",
    "QuadratureResult",
    "quadrature",
    "log_gamma",
    "laguerre",
    "laguerre_explicit",
    "radial_wavefunction",
    "expectation_r2",
    "ode_residual",
    "normalization_integral",
    "r2_integral",
    "overlap_integral",
    "DEFAULT_ODE_GRID",
]

DEFAULT_ODE_GRID = np.geomspace(1e-3, 8.0, 200)


def log_gamma(x: float) -> float:
    """Natural log of the Gamma function for ``x > 0``."""
    x = float(x)
    if not x > 0.0:
        raise ParameterDomainError(f"log_gamma requires x > 0, got {x!r}")
    return math.lgamma(x)


def laguerre(n: int, a: float, x):
    """Associated Laguerre polynomial ``L_n^(a)(x)`` by upward recurrence.

    ``(k+1) L_{k+1} = (2k + 1 + a - x) L_k - (k + a) L_{k-1}``.  Accepts a
    scalar or array ``x``.
    """
    if n < 0 or int(n) != n:
        raise ParameterDomainError(f"n must be a non-negative integer, got {n!r}")
    if not a > -1.0:
        raise ParameterDomainError(f"Laguerre parameter must exceed -1, got {a!r}")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev if prev.ndim else float(prev)
    cur = 1.0 + a - x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + a - x) * cur - (k + a) * prev) / (k + 1)
    return cur if cur.ndim else float(cur)


def laguerre_explicit(n: int, a: float, x: float) -> float:
    """Direct sum ``sum_k (-1)^k C(n+a, n-k) x^k / k!``; small-n oracle only."""
    total = 0.0
    for k in range(n + 1):
        log_binom = math.lgamma(n + a + 1) - math.lgamma(n - k + 1) - math.lgamma(a + k + 1)
        total += (-1) ** k * math.exp(log_binom) * x**k / math.factorial(k)
    return total


def _laguerre_d1(n, a, x):
    # d/dx L_n^(a) = -L_{n-1}^(a+1)
    return -laguerre(n - 1, a + 1, x) if n >= 1 else np.zeros_like(np.asarray(x, dtype=float))


def _laguerre_d2(n, a, x):
    return laguerre(n - 2, a + 2, x) if n >= 2 else np.zeros_like(np.asarray(x, dtype=float))


@dataclass(frozen=True)
class RadialState:
    """A normalised radial eigenfunction labelled by ``n`` and ``alpha``.

    ``norm`` is derived from ``n`` and ``alpha`` on construction; pass
    only the two labels.
    """

    n: int
    alpha: float
    log_norm: float = field(init=False, repr=False)

    def __post_init__(self):
        if self.n < 0 or int(self.n) != self.n:
            raise ParameterDomainError(f"n must be a non-negative integer, got {self.n!r}")
        if not (self.alpha > 0.0 and math.isfinite(self.alpha)):
            raise ParameterDomainError(f"alpha must be positive, got {self.alpha!r}")
        log_norm = 0.5 * (math.log(2.0) + math.lgamma(self.n + 1) - log_gamma(self.alpha + self.n + 0.5))
        object.__setattr__(self, "log_norm", log_norm)

    @property
    def norm(self) -> float:
        return math.exp(self.log_norm)

    @property
    def laguerre_parameter(self) -> float:
        return self.alpha - 0.5


def _envelope(state: RadialState, r: np.ndarray) -> np.ndarray:
    return np.exp(state.log_norm - 0.5 * r * r + (state.alpha - 1.0) * np.log(r))


def _check_radii(r) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    if np.any(~(r > 0.0)):
        raise ParameterDomainError("radial functions are evaluated at r > 0 only")
    return r


def radial_wavefunction(state: RadialState, r):
    """Evaluate ``R(r)`` for scalar or array ``r > 0``."""
    r = _check_radii(r)
    out = _envelope(state, r) * laguerre(state.n, state.laguerre_parameter, r * r)
    return out if np.ndim(out) else float(out)


def expectation_r2(state: RadialState) -> float:
    """Closed-form ``<r**2> = 2n + alpha + 1/2``."""
    return 2 * state.n + state.alpha + 0.5


def ode_residual(state: RadialState, energy: float, c: float, grid=None) -> float:
    """Maximum relative residual of the radial Schroedinger equation.

    Checks ``-1/2 (R'' + 2 R'/r - c R / r**2) + r**2 R / 2 = E R`` on
    ``grid`` using analytic derivatives, and returns
    ``max |H R - E R| / max(1, |E R|)``.
    """
    r = _check_radii(DEFAULT_ODE_GRID if grid is None else grid)
    n, a, alpha = state.n, state.laguerre_parameter, state.alpha
    x = r * r
    lag = laguerre(n, a, x)
    d1 = _laguerre_d1(n, a, x)
    d2 = _laguerre_d2(n, a, x)
    # R = u L(r^2), u = N exp(-r^2/2) r^(alpha-1); everything below is R/u.
    g1 = -r + (alpha - 1.0) / r
    g2 = -1.0 - (alpha - 1.0) / (r * r)
    dR = g1 * lag + 2.0 * r * d1
    ddR = (g2 + g1 * g1) * lag + 4.0 * r * g1 * d1 + 2.0 * d1 + 4.0 * x * d2
    h_r = -0.5 * (ddR + 2.0 * dR / r - c * lag / x) + 0.5 * x * lag
    u = _envelope(state, r)
    e_r = energy * lag * u
    residual = np.abs((h_r - energy * lag) * u) / np.maximum(1.0, np.abs(e_r))
    return float(np.max(residual))


def normalization_integral(state: RadialState, spec: QuadratureSpec | None = None) -> QuadratureResult:
    """``int_0^inf R**2 r**2 dr`` by quadrature."""
    return overlap_integral(state, state, spec)


def r2_integral(state: RadialState, spec: QuadratureSpec | None = None) -> QuadratureResult:
    """``int_0^inf R**2 r**4 dr`` by quadrature."""
    return quadrature(lambda r: radial_wavefunction(state, r) ** 2 * r**4, spec)


def overlap_integral(left: RadialState, right: RadialState, spec: QuadratureSpec | None = None) -> QuadratureResult:
    """``int_0^inf R_left R_right r**2 dr`` by quadrature."""
    return quadrature(lambda r: radial_wavefunction(left, r) * radial_wavefunction(right, r) * r**2, spec)
