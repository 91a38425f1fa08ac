"""Effective PT-symmetric two-level system.

A lambda-type three-level atom with equal optical couplings, equal detunings
and balanced gain/loss reduces to a non-Hermitian two-level generator

    H = [[i*gamma, 1 - omega*e^{i*phi}], [1 - omega*e^{-i*phi}, -i*gamma]]

whose spectrum is +/- sqrt(J^2 - gamma^2) with J = |1 - omega*e^{i*phi}|.
The spectrum is real when the coupling J dominates the gain/loss rate
(PT-symmetric phase), imaginary when gamma dominates (broken phase), and
collapses to zero on the border (exceptional points). hbar = 1 throughout;
time and gamma are dimensionless in units of the coupling scale.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

PHASE_TOL = 1e-9
SERIES_THRESHOLD = 1e-6
_KET_EXCITED = np.array([1.0, 0.0], dtype=complex)  # |1>, the gain level


class PhaseLabel(str, Enum):
    PTS = "PTS"
    PTSB = "PTSB"
    EXCEPTIONAL = "EXCEPTIONAL"


@dataclass(frozen=True)
class ThreeLevelParams:
    """Raw lambda-system parameters: detunings, optical Rabi rates, RF coupling."""

    delta1: float
    delta2: float
    g: float
    G: float
    omega_rf: float
    phi: float


def effective_coupling(tl: ThreeLevelParams) -> float:
    """Dimensionless coupling delta*omega_rf/G^2 of the reduced two-level system.

    The reduction assumes equal detunings and equal optical couplings; inputs
    violating either assumption are rejected.
    """
    if not math.isclose(tl.delta1, tl.delta2, rel_tol=1e-12, abs_tol=1e-12):
        raise ValueError(f"reduction assumes equal detunings, got {tl.delta1} and {tl.delta2}")
    if not math.isclose(tl.g, tl.G, rel_tol=1e-12, abs_tol=1e-12):
        raise ValueError(f"reduction assumes equal couplings, got {tl.g} and {tl.G}")
    if tl.G == 0:
        raise ValueError("optical coupling G must be nonzero")
    return tl.delta1 * tl.omega_rf / tl.G**2


@dataclass(frozen=True)
class PTParams:
    """Dimensionless coupling strength, relative phase, and gain/loss rate."""

    omega: float
    phi: float
    gamma: float

    @property
    def coupling(self) -> float:
        """Effective inter-level coupling J = |1 - omega*e^{i*phi}|."""
        return abs(1 - self.omega * cmath.exp(1j * self.phi))

    @property
    def freq(self) -> complex:
        """Characteristic frequency sqrt(J^2 - gamma^2), principal branch.

        Real in the PT-symmetric phase, purely imaginary in the broken phase,
        zero at an exceptional point.
        """
        return cmath.sqrt(complex(self.coupling**2 - self.gamma**2))

    def phase(self, tol: float = PHASE_TOL) -> PhaseLabel:
        gap = self.coupling - self.gamma
        if gap > tol:
            return PhaseLabel.PTS
        if gap < -tol:
            return PhaseLabel.PTSB
        return PhaseLabel.EXCEPTIONAL


def h_eff(p: PTParams) -> np.ndarray:
    """Non-Hermitian 2x2 generator in the {gain level, loss level} basis."""
    off = 1 - p.omega * cmath.exp(1j * p.phi)
    return np.array(
        [[1j * p.gamma, off], [np.conj(off), -1j * p.gamma]], dtype=complex
    )


def eigenvalues(p: PTParams) -> tuple[complex, complex]:
    """The spectrum (+freq, -freq) of the effective generator."""
    w = p.freq
    return w, -w


def _cos_and_sinc(z: complex, t: float, w: complex, series_threshold: float):
    """cos(w*t) and sin(w*t)/w, with a Taylor branch near the exceptional point.

    z = w*t. The series branch keeps the 0/0 limit finite: cos -> 1 - z^2/2,
    sin(z)/w -> t*(1 - z^2/6).
    """
    if abs(z) < series_threshold or w == 0:
        return 1 - z * z / 2, t * (1 - z * z / 6)
    return cmath.cos(z), cmath.sin(z) / w


def propagator(p: PTParams, t: float, series_threshold: float = SERIES_THRESHOLD) -> np.ndarray:
    """Non-unitary time translation operator exp(-i*H*t).

    Because H^2 = freq^2 * I, the exponential closes at first order:
    U = cos(w t) I - i sin(w t)/w * H, evaluated in complex arithmetic so the
    PT-symmetric, broken and exceptional regimes share one code path.
    `series_threshold` selects the Taylor branch when |w*t| falls below it
    (exposed so both branches can be cross-checked; 0 forces direct
    evaluation, math.inf forces the series).
    """
    if t < 0:
        raise ValueError(f"time must be nonnegative, got {t}")
    w = p.freq
    c, s = _cos_and_sinc(w * t, t, w, series_threshold)
    off = 1 - p.omega * cmath.exp(1j * p.phi)
    return np.array(
        [
            [c + p.gamma * s, -1j * off * s],
            [-1j * np.conj(off) * s, c - p.gamma * s],
        ],
        dtype=complex,
    )


def rho_t(p: PTParams, t: float, initial: np.ndarray | None = None) -> np.ndarray:
    """Normalized pure-state density matrix after non-unitary evolution.

    The unnormalized ket U(t)|initial> is projected to a density matrix and
    renormalized by its squared norm, which keeps the state a valid unit-trace
    projector in every regime. `initial` defaults to the gain level |1>.
    """
    if initial is None:
        initial = _KET_EXCITED
    psi = propagator(p, t) @ np.asarray(initial, dtype=complex)
    norm_sq = float(np.vdot(psi, psi).real)
    if norm_sq < 1e-14:
        raise ValueError("evolved state norm vanished; cannot normalize")
    return np.outer(psi, psi.conj()) / norm_sq
