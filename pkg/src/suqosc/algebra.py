"""su_q(2) generators acting on monomials ``xi**s * exp(i m phi)``.

With ``xi = tan(theta/2)`` one has ``sin(theta) d/dtheta xi**s = s xi**s``,
so each monomial is a joint eigenfunction of

    T1 = -1/2 (sin(theta) d_theta - i d_phi)  ->  a = -(s + m)/2
    T2 = -1/2 (sin(theta) d_theta + i d_phi)  ->  b = -(s - m)/2

and the generators

    J3 = -i d_phi
    J+ = -exp(i phi)  (tan(theta/2) [T1]_q q**T2 + cot(theta/2) q**T1 [T2]_q)
    J- =  exp(-i phi) (cot(theta/2) [T1]_q q**T2 + tan(theta/2) q**T1 [T2]_q)

shift ``(s, m)`` by ``(+-1, +-1)`` with scalar coefficients.  Every
operator identity can therefore be checked exactly, monomial by
monomial, on finitely many terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .casimir import CasimirKind
from .deform import DeformationParameter, Regime, q_number, q_power

__all__ = [
    "Monomial",
    "MonomialSum",
    "PRUNE_TOL",
    "apply_J3",
    "apply_Jplus",
    "apply_Jminus",
    "classical_Jplus",
    "commutator",
    "commutator_residuals",
    "casimir_operator_apply",
    "casimir_invariance_residual",
    "CommutatorResiduals",
    "DEFAULT_S_LATTICE",
    "DEFAULT_M_LATTICE",
    "default_w_lattice",
]

PRUNE_TOL = 1e-15
# Exponents are snapped to this many decimals so that shifted keys recombine.
_KEY_DIGITS = 12

DEFAULT_S_LATTICE = (-2.0, -0.5, 0.0, 1.0, 3.5)
DEFAULT_M_LATTICE = tuple(range(-3, 4))


def default_w_lattice(regime: Regime, count: int = 20) -> np.ndarray:
    """``count`` deformation strengths inside the regime's domain."""
    return np.linspace(0.05, 3.0, count)


@dataclass(frozen=True)
class Monomial:
    """One term ``coeff * xi**s * exp(i m phi)``.

    ``mag`` is the sum of ``|contributions|`` that produced ``coeff``,
    i.e. the coefficient as it would be without cancellation.  It sets
    the roundoff scale of ``coeff``.
    """

    s: float
    m: int
    coeff: complex = 1.0
    mag: float | None = None

    @property
    def scale(self) -> float:
        return abs(self.coeff) if self.mag is None else self.mag


def _key(s: float, m: int) -> tuple[float, int]:
    return (round(float(s), _KEY_DIGITS) + 0.0, int(m))


class MonomialSum:
    """A finite sum ``sum c_{s,m} xi**s exp(i m phi)``.

    Coefficients are pruned once they fall below ``PRUNE_TOL`` relative
    to ``max(1, mag)``, where ``mag`` is the cancellation-free magnitude
    carried alongside every coefficient.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[Monomial] | None = None):
        acc: dict[tuple[float, int], list] = {}
        for t in terms or ():
            entry = acc.setdefault(_key(t.s, t.m), [0j, 0.0])
            entry[0] += complex(t.coeff)
            entry[1] += t.scale
        self._terms = {
            k: (c, mag) for k, (c, mag) in acc.items() if abs(c) >= PRUNE_TOL * max(1.0, mag)
        }

    @classmethod
    def monomial(cls, s: float, m: int, coeff: complex = 1.0) -> "MonomialSum":
        return cls([Monomial(s, m, coeff)])

    def __iter__(self) -> Iterator[Monomial]:
        for (s, m), (c, mag) in sorted(self._terms.items()):
            yield Monomial(s, m, c, mag)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "MonomialSum") -> "MonomialSum":
        return MonomialSum(list(self) + list(other))

    def __sub__(self, other: "MonomialSum") -> "MonomialSum":
        return self + other.scale(-1.0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialSum):
            return NotImplemented
        return {k: c for k, (c, _) in self._terms.items()} == {k: c for k, (c, _) in other._terms.items()}

    def __repr__(self) -> str:
        body = " + ".join(f"({t.coeff:.6g}) xi^{t.s:g} e^{{{t.m}i phi}}" for t in self)
        return f"MonomialSum({body or '0'})"

    def scale(self, factor: complex) -> "MonomialSum":
        return MonomialSum([_times(t, t.s, t.m, factor) for t in self])

    def coefficient(self, s: float, m: int) -> complex:
        return self._terms.get(_key(s, m), (0j, 0.0))[0]

    def magnitude(self, s: float, m: int) -> float:
        return self._terms.get(_key(s, m), (0j, 0.0))[1]

    def max_abs(self) -> float:
        return max((abs(c) for c, _ in self._terms.values()), default=0.0)

    def max_relative(self) -> float:
        """Largest ``|coeff| / max(1, mag)``: a roundoff-normalised size."""
        return max((abs(c) / max(1.0, mag) for c, mag in self._terms.values()), default=0.0)

    def evaluate(self, theta, phi):
        """Pointwise value at the angles ``(theta, phi)``."""
        xi = np.tan(np.asarray(theta, dtype=float) / 2.0)
        phi = np.asarray(phi, dtype=float)
        return sum(t.coeff * xi**t.s * np.exp(1j * t.m * phi) for t in self)


def _times(t: Monomial, s: float, m: int, factor: complex) -> Monomial:
    return Monomial(s, m, t.coeff * factor, t.scale * abs(factor))


def _t_eigenvalues(s: float, m: int) -> tuple[float, float]:
    return -(s + m) / 2.0, -(s - m) / 2.0


def apply_J3(f: MonomialSum) -> MonomialSum:
    return MonomialSum([_times(t, t.s, t.m, t.m) for t in f])


def apply_Jplus(f: MonomialSum, p: DeformationParameter) -> MonomialSum:
    out = []
    for t in f:
        a, b = _t_eigenvalues(t.s, t.m)
        out.append(_times(t, t.s + 1, t.m + 1, -q_number(a, p) * q_power(b, p)))
        out.append(_times(t, t.s - 1, t.m + 1, -q_power(a, p) * q_number(b, p)))
    return MonomialSum(out)


def apply_Jminus(f: MonomialSum, p: DeformationParameter) -> MonomialSum:
    out = []
    for t in f:
        a, b = _t_eigenvalues(t.s, t.m)
        out.append(_times(t, t.s - 1, t.m - 1, q_number(a, p) * q_power(b, p)))
        out.append(_times(t, t.s + 1, t.m - 1, q_power(a, p) * q_number(b, p)))
    return MonomialSum(out)


def classical_Jplus(f: MonomialSum) -> MonomialSum:
    """Undeformed raising operator ``-exp(i phi) (tan(theta/2) T1 + cot(theta/2) T2)``."""
    out = []
    for t in f:
        a, b = _t_eigenvalues(t.s, t.m)
        out.append(_times(t, t.s + 1, t.m + 1, -a))
        out.append(_times(t, t.s - 1, t.m + 1, -b))
    return MonomialSum(out)


def commutator(op_a, op_b, f: MonomialSum) -> MonomialSum:
    """``[A, B] f = A(B f) - B(A f)`` for single-argument operators."""
    return op_a(op_b(f)) - op_b(op_a(f))


@dataclass(frozen=True)
class CommutatorResiduals:
    """Residuals on one monomial, each relative to ``max(1, mag)`` of its coefficient."""

    offdiag_max: float
    diag_err: float
    j3_err: float
    diag_target: float

    def __iter__(self):
        return iter((self.offdiag_max, self.diag_err, self.j3_err))


def _relative(f: MonomialSum, s: float, m: int, target: complex = 0.0) -> float:
    return abs(f.coefficient(s, m) - target) / max(1.0, f.magnitude(s, m))


def commutator_residuals(s: float, m: int, p: DeformationParameter) -> CommutatorResiduals:
    """Residuals of ``[J3, J+-] = +-J+-`` and ``[J+, J-] = [2 J3]_q`` on one monomial."""
    f = MonomialSum.monomial(s, m)
    jp = lambda g: apply_Jplus(g, p)  # noqa: E731
    jm = lambda g: apply_Jminus(g, p)  # noqa: E731

    comm = commutator(jp, jm, f)
    offdiag = max(_relative(comm, s + 2, m), _relative(comm, s - 2, m))
    target = q_number(2 * m, p)
    diag_err = _relative(comm, s, m, target)

    err_plus = (commutator(apply_J3, jp, f) - jp(f)).max_relative()
    err_minus = (commutator(apply_J3, jm, f) + jm(f)).max_relative()
    return CommutatorResiduals(offdiag, diag_err, max(err_plus, err_minus), target)


def _casimir_diagonal(m: int, kind: CasimirKind, p: DeformationParameter) -> float:
    if kind is CasimirKind.CQ:
        h = q_number(m - 0.5, p)
        return h * h - 0.25
    return q_number(m, p) * q_number(m - 1, p)


def casimir_operator_apply(f: MonomialSum, kind: CasimirKind, p: DeformationParameter) -> MonomialSum:
    """Apply ``C_q`` or ``C'_q`` as the operator expression in the generators."""
    kind = CasimirKind(kind)
    diagonal = MonomialSum([_times(t, t.s, t.m, _casimir_diagonal(t.m, kind, p)) for t in f])
    return apply_Jplus(apply_Jminus(f, p), p) + diagonal


def casimir_invariance_residual(s: float, m: int, kind: CasimirKind, p: DeformationParameter) -> float:
    """Largest coefficient of ``[C, J+]`` and ``[C, J-]`` on one monomial, relative to term size."""
    f = MonomialSum.monomial(s, m)
    cas = lambda g: casimir_operator_apply(g, kind, p)  # noqa: E731
    plus = commutator(cas, lambda g: apply_Jplus(g, p), f).max_relative()
    minus = commutator(cas, lambda g: apply_Jminus(g, p), f).max_relative()
    return max(plus, minus)
