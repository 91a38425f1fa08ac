"""Qubit noise channels: random telegraph, phase damping, amplitude damping.

Each channel is specified by its physical rates and evaluated into a Kraus
pair at a given time. Channels act on single qubits or independently on the
two output arms of the beam-splitter. Closed-form concurrence factors are
provided for cross-validating the full Kraus pipeline.

The random-telegraph switching rate is written `switch_rate` throughout
(rather than gamma) to keep it distinct from the PT gain/loss rate.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np

from . import linalg
from .beamsplitter import QubitState

_PD_DOMAIN_SLACK = 1e-12


@dataclass(frozen=True)
class RandomTelegraph:
    """Dephasing by a bistable fluctuator: coupling strength a, switching rate 1/(2 tau)."""

    coupling: float
    switch_rate: float

    def __post_init__(self):
        if self.coupling < 0 or self.switch_rate < 0:
            raise ValueError("RTN rates must be nonnegative")

    @property
    def non_markovian(self) -> bool:
        """True when the coupling dominates switching (4 a tau > 1), giving revivals."""
        return 2 * self.coupling > self.switch_rate


@dataclass(frozen=True)
class PhaseDamping:
    """Pure dephasing with damping parameter 1 - cos^2(rate * t)."""

    rate: float

    def __post_init__(self):
        if self.rate < 0:
            raise ValueError("phase damping rate must be nonnegative")


@dataclass(frozen=True)
class AmplitudeDamping:
    """Energy relaxation with decay parameter 1 - exp(-rate * t)."""

    rate: float

    def __post_init__(self):
        if self.rate < 0:
            raise ValueError("amplitude damping rate must be nonnegative")


ChannelSpec = Union[RandomTelegraph, PhaseDamping, AmplitudeDamping]


class KrausPair(NamedTuple):
    k0: np.ndarray
    k1: np.ndarray


def _sinc(z: complex) -> complex:
    """sin(z)/z, series-expanded near zero."""
    if abs(z) < 1e-6:
        return 1 - z * z / 6
    return cmath.sin(z) / z


def rtn_kernel(spec: RandomTelegraph, t: float) -> float:
    """Memory kernel of the random-telegraph channel.

    With nu = sqrt(4 a^2 - switch_rate^2) taken as a complex root,

        Lambda(t) = exp(-switch_rate t) * (cos(nu t) + switch_rate t sinc(nu t)),

    which is the usual (mu, switch_rate) parametrization with mu = nu/switch_rate.
    Imaginary nu (Markovian regime) turns the trigonometric terms hyperbolic
    automatically, so both regimes share this one path. Lambda(0) = 1 and
    negative excursions only occur in the non-Markovian regime.
    """
    if t < 0:
        raise ValueError(f"time must be nonnegative, got {t}")
    nu = cmath.sqrt(complex(4 * spec.coupling**2 - spec.switch_rate**2))
    z = nu * t
    value = cmath.exp(-spec.switch_rate * t) * (cmath.cos(z) + spec.switch_rate * t * _sinc(z))
    return float(value.real)


def _pd_lambda(spec: PhaseDamping, t: float) -> float:
    arg = spec.rate * t
    if arg < 0 or arg > math.pi / 2 + _PD_DOMAIN_SLACK:
        raise ValueError(f"phase damping defined for rate*t in [0, pi/2], got {arg}")
    return 1 - math.cos(arg) ** 2


def _ad_gamma(spec: AmplitudeDamping, t: float) -> float:
    if t < 0:
        raise ValueError(f"time must be nonnegative, got {t}")
    return 1 - math.exp(-spec.rate * t)


def coherence_factor(spec: ChannelSpec, t: float) -> float:
    """Factor multiplying the qubit coherence x under a single channel arm.

    Random telegraph: Lambda(t) (may be negative in the non-Markovian regime);
    phase damping: sqrt(1 - lambda(t)) = cos(rate*t); amplitude damping:
    sqrt(1 - gamma(t)) = exp(-rate*t/2).
    """
    if isinstance(spec, RandomTelegraph):
        return rtn_kernel(spec, t)
    if isinstance(spec, PhaseDamping):
        return math.sqrt(1 - _pd_lambda(spec, t))
    if isinstance(spec, AmplitudeDamping):
        return math.sqrt(1 - _ad_gamma(spec, t))
    raise TypeError(f"unknown channel spec {spec!r}")


def kraus_at(spec: ChannelSpec, t: float) -> KrausPair:
    """Evaluate a channel into its Kraus pair at time t.

    At t = 0 every channel is the identity (k0 = I, k1 = 0); completeness
    k0†k0 + k1†k1 = I holds for all admitted parameters.
    """
    if t < 0:
        raise ValueError(f"time must be nonnegative, got {t}")
    if isinstance(spec, RandomTelegraph):
        lam = rtn_kernel(spec, t)
        if abs(lam) > 1 + 1e-12:
            raise ValueError(f"memory kernel left [-1, 1]: {lam}")
        w0 = math.sqrt(max(0.0, (1 + lam) / 2))
        w1 = math.sqrt(max(0.0, (1 - lam) / 2))
        return KrausPair(w0 * np.eye(2, dtype=complex), w1 * np.diag([1.0, -1.0]).astype(complex))
    if isinstance(spec, PhaseDamping):
        lam = _pd_lambda(spec, t)
        return KrausPair(
            np.diag([1.0, math.sqrt(1 - lam)]).astype(complex),
            np.diag([0.0, math.sqrt(lam)]).astype(complex),
        )
    if isinstance(spec, AmplitudeDamping):
        g = _ad_gamma(spec, t)
        return KrausPair(
            np.diag([1.0, math.sqrt(1 - g)]).astype(complex),
            np.array([[0, math.sqrt(g)], [0, 0]], dtype=complex),
        )
    raise TypeError(f"unknown channel spec {spec!r}")


def apply_qubit(spec: ChannelSpec, t: float, rho) -> np.ndarray:
    """Apply one channel arm to a single-qubit density matrix."""
    a = linalg.check_density_matrix(linalg.as_matrix(rho, dims=(2,)))
    k0, k1 = kraus_at(spec, t)
    return k0 @ a @ k0.conj().T + k1 @ a @ k1.conj().T


def apply_two_arm(
    spec_a: ChannelSpec, spec_b: ChannelSpec, t_a: float, t_b: float, rho
) -> np.ndarray:
    """Apply independent channel arms to the two modes of a 4x4 state.

    Arm parameters are independent; experiments typically use identical arms
    but nothing here requires it.
    """
    a = linalg.check_density_matrix(linalg.as_matrix(rho, dims=(4,)))
    pair_a = kraus_at(spec_a, t_a)
    pair_b = kraus_at(spec_b, t_b)
    out = np.zeros_like(a)
    for ka in pair_a:
        for kb in pair_b:
            k = np.kron(ka, kb)
            out += k @ a @ k.conj().T
    return out


def concurrence_analytic(
    q: QubitState,
    spec_a: ChannelSpec | None,
    spec_b: ChannelSpec | None,
    t_a: float = 0.0,
    t_b: float = 0.0,
) -> float:
    """Closed-form concurrence of the noisy beam-splitter output.

    Noiseless (both specs None): p. Same-kind arms: p times the product of
    the two arms' coherence factors, clamped at zero: the random-telegraph
    product can go negative when a kernel oscillates, and concurrence cannot.
    Mixed channel kinds have no closed form and are rejected.

    Note the clamp understates the true concurrence when exactly one
    random-telegraph kernel is negative (the pipeline then yields
    p*|f_a*f_b|); with identical arms the product is a square and the
    formula is exact.
    """
    if spec_a is None and spec_b is None:
        return q.p
    if spec_a is None or spec_b is None or type(spec_a) is not type(spec_b):
        raise ValueError("closed form requires both arms of the same channel kind")
    factor = coherence_factor(spec_a, t_a) * coherence_factor(spec_b, t_b)
    return max(0.0, q.p * factor)


def concurrence_rtn_p1(spec1: RandomTelegraph, spec2: RandomTelegraph, t: float) -> float:
    """Product of the two arms' memory kernels.

    For the single-photon input (p = 1) this is the closed-form concurrence
    whenever the product is nonnegative, in particular for identical arms
    where it equals Lambda(t)^2.
    """
    if not isinstance(spec1, RandomTelegraph) or not isinstance(spec2, RandomTelegraph):
        raise TypeError("both arms must be random-telegraph channels")
    return rtn_kernel(spec1, t) * rtn_kernel(spec2, t)
