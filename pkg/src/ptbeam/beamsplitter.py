"""Balanced beam-splitter output state for a qubit mixed with vacuum.

The single-mode input is the qubit (p, x): population p of the one-photon
component and coherence x. Mixing it with vacuum on a balanced beam-splitter
produces a two-mode state confined to the zero- and one-photon sectors; its
entanglement reflects the nonclassicality of the input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg

QUBIT_TOL = 1e-9

_SQRT2 = math.sqrt(2.0)

# Standard gate matrices on the two-qubit basis {|00>, |01>, |10>, |11>}.
T_GATE = np.diag([1.0, np.exp(1j * np.pi / 4)])
CS_GATE = np.diag([1.0, 1.0, 1.0, 1j])
SQRT_SWAP = np.array(
    [
        [1, 0, 0, 0],
        [0, (1 + 1j) / 2, (1 - 1j) / 2, 0],
        [0, (1 - 1j) / 2, (1 + 1j) / 2, 0],
        [0, 0, 0, 1],
    ],
    dtype=complex,
)


@dataclass(frozen=True)
class QubitState:
    """(p, x) parametrization of a single-qubit density matrix.

    p is the excited-level population, x the off-diagonal coherence:
    rho = [[1-p, x], [x*, p]]. Positivity requires |x|^2 <= p(1-p).
    """

    p: float
    x: complex = 0j
    tol: float = field(default=QUBIT_TOL, repr=False, compare=False)

    def __post_init__(self):
        if not (-self.tol <= self.p <= 1 + self.tol):
            raise ValueError(f"population p must lie in [0, 1], got {self.p}")
        if abs(self.x) ** 2 > self.p * (1 - self.p) + self.tol:
            raise ValueError(
                f"coherence |x|={abs(self.x)} violates |x|^2 <= p(1-p) for p={self.p}"
            )

    def matrix(self) -> np.ndarray:
        return np.array([[1 - self.p, self.x], [np.conj(self.x), self.p]], dtype=complex)

    @classmethod
    def from_matrix(cls, rho, tol: float = QUBIT_TOL) -> "QubitState":
        a = linalg.check_density_matrix(linalg.as_matrix(rho, dims=(2,)), tol)
        return cls(p=float(a[1, 1].real), x=complex(a[0, 1]), tol=tol)


def bs_output(q: QubitState) -> np.ndarray:
    """Two-mode output state of the balanced beam-splitter with vacuum on port B.

    Basis {|00>, |01>, |10>, |11>}: the diagonal is (1-p, p/2, p/2, 0), the
    input coherence splits into i*x/sqrt(2) and x/sqrt(2) against the vacuum
    component, the one-photon block carries -i*p/2, and the two-photon row and
    column vanish identically.
    """
    p, x = q.p, q.x
    xc = np.conj(x)
    return np.array(
        [
            [1 - p, 1j * x / _SQRT2, x / _SQRT2, 0],
            [-1j * xc / _SQRT2, p / 2, -1j * p / 2, 0],
            [xc / _SQRT2, 1j * p / 2, p / 2, 0],
            [0, 0, 0, 0],
        ],
        dtype=complex,
    )


def bs_unitary(theta: float = math.pi / 2) -> np.ndarray:
    """Beam-splitter unitary on the two-qubit (at most one photon per mode) space.

    The generator exchanges excitations between the modes and conserves total
    photon number, so the matrix is block diagonal: identity on |00> and |11>,
    exp(-i*(theta/2)*sigma_x) on the one-photon sector. theta = pi/2 is the
    balanced splitter; conjugating rho (x) |0><0| with it reproduces
    bs_output exactly.
    """
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    u = np.eye(4, dtype=complex)
    u[1:3, 1:3] = np.array([[c, -1j * s], [-1j * s, c]])
    return u


def gate_decomposition() -> np.ndarray:
    """Product (controlled-S) (T (x) T) sqrt(SWAP) of standard gate matrices.

    Returned as-is for comparison against bs_unitary(); see
    phase_aligned_distance for a convention-insensitive comparison. Under the
    conventions fixed in this module the product matches the beam-splitter
    unitary only block-by-block, with a photon-number dependent phase i^n.
    """
    return CS_GATE @ np.kron(T_GATE, T_GATE) @ SQRT_SWAP


def phase_aligned_distance(a, b) -> float:
    """Frobenius distance min over theta of ||a - e^{i*theta} b||.

    The optimal phase aligns tr(b† a) with the positive real axis; two
    unitaries that are physically identical up to global phase give zero.
    """
    am = linalg.as_matrix(a)
    bm = linalg.as_matrix(b)
    z = np.trace(bm.conj().T @ am)
    phase = z / abs(z) if abs(z) > 0 else 1.0
    return float(np.linalg.norm(am - phase * bm))
