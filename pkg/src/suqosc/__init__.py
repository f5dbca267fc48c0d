"""Spectrum, wave functions and quadrupole moments of the su_q(2)-invariant oscillator."""

__version__ = "0.1.0"

from .casimir import CasimirKind, RootClassification, RootVariant, casimir_eigenvalue, classify_roots
from .deform import DeformationParameter, Regime, q_number, q_power
from .quadrupole import angular_factor, quadrupole_moment, quadrupole_sweep
from .radial import RadialState, expectation_r2, radial_wavefunction
from .spectrum import Branch, Level, closed_form_energy, energy, enumerate_levels

__all__ = [
    "__version__",
    "Branch",
    "CasimirKind",
    "DeformationParameter",
    "Level",
    "RadialState",
    "Regime",
    "RootClassification",
    "RootVariant",
    "angular_factor",
    "casimir_eigenvalue",
    "classify_roots",
    "closed_form_energy",
    "energy",
    "enumerate_levels",
    "expectation_r2",
    "q_number",
    "q_power",
    "quadrupole_moment",
    "quadrupole_sweep",
    "radial_wavefunction",
]
