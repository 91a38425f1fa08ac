"""Schmidt decomposition of two-qubit pure states via the 2x2 amplitude matrix.

A ket a|00> + b|01> + c|10> + d|11> is the matrix [[a, b], [c, d]]; its
singular values give the Schmidt weights. Includes the closed-form singular
values and the Bell-diagonal concurrence of the dephased single-photon state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg

NORM_TOL = 1e-12
_DEGENERACY_TOL = 1e-12
_SMALL_SIGMA = 1e-7


@dataclass(frozen=True)
class AmplitudeMatrix:
    """Normalized amplitudes of |00>, |01>, |10>, |11>."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        norm = abs(self.a) ** 2 + abs(self.b) ** 2 + abs(self.c) ** 2 + abs(self.d) ** 2
        if abs(norm - 1) > NORM_TOL:
            raise ValueError(f"amplitudes must be normalized, got |.|^2 = {norm}")

    @classmethod
    def from_ket(cls, ket) -> "AmplitudeMatrix":
        v = np.asarray(ket, dtype=complex).reshape(4)
        return cls(*v)

    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    def ket(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c, self.d], dtype=complex)


@dataclass(frozen=True)
class SchmidtForm:
    """Schmidt weights and bases: ket = sum_k sigma_k left[:,k] (x) right[:,k].

    alpha is the larger squared weight, so alpha in [1/2, 1]; alpha = 1 means
    a product state, alpha = 1/2 maximal entanglement.
    """

    alpha: float
    left: np.ndarray
    right: np.ndarray

    @property
    def weights(self) -> tuple[float, float]:
        return math.sqrt(self.alpha), math.sqrt(max(0.0, 1 - self.alpha))

    def reconstruct(self) -> np.ndarray:
        w0, w1 = self.weights
        return w0 * np.kron(self.left[:, 0], self.right[:, 0]) + w1 * np.kron(
            self.left[:, 1], self.right[:, 1]
        )


def singular_values(m: AmplitudeMatrix) -> tuple[float, float]:
    """Closed-form singular values sqrt(1/2 +/- sqrt(1/4 - |det|^2)).

    det = ad - bc; normalization makes the squares sum to one, so the pair is
    (1, 0) for product states and (1/sqrt2, 1/sqrt2) for maximally entangled
    ones.
    """
    det = m.a * m.d - m.b * m.c
    disc = math.sqrt(max(0.0, 0.25 - abs(det) ** 2))
    s_plus = math.sqrt(0.5 + disc)
    s_minus = math.sqrt(max(0.0, 0.5 - disc))
    return s_plus, s_minus


def schmidt_decompose(m: AmplitudeMatrix) -> SchmidtForm:
    """Schmidt form with deterministic bases.

    Right vectors come from the Hermitian eigenproblem of M†M (descending);
    degenerate singular values fall back to the computational basis. Left
    vectors are M v / sigma, completed orthonormally when sigma vanishes.
    The reconstruction sum reproduces the input ket exactly (no global-phase
    ambiguity is introduced).
    """
    mat = m.matrix()
    gram = mat.conj().T @ mat
    w, v = linalg.eig_hermitian(gram)
    if w[0] - w[1] <= _DEGENERACY_TOL:
        v = np.eye(2, dtype=complex)
    sigma = np.sqrt(np.clip(w, 0.0, None))

    # sigma[0] >= 1/sqrt(2) always, so the first left vector is well conditioned
    u0 = mat @ v[:, 0] / sigma[0]
    u0 = u0 / np.linalg.norm(u0)
    if sigma[1] > _SMALL_SIGMA:
        u1 = mat @ v[:, 1] / sigma[1]
        u1 = u1 / np.linalg.norm(u1)
    else:
        u1 = np.array([-np.conj(u0[1]), np.conj(u0[0])])
    left = np.column_stack([u0, u1])
    right = np.conj(v)  # kets: beta_ij = sum_k sigma_k u_k[i] conj(v_k)[j]
    alpha = min(1.0, float(sigma[0] ** 2))
    return SchmidtForm(alpha=alpha, left=left, right=right)


def pd_bell_diagonal_concurrence(lambda1: float, lambda2: float) -> float:
    """Concurrence of the single-photon Bell-like state after two-arm dephasing.

    The dephased state is Bell diagonal with weights (1 +/- sqrt((1-l1)(1-l2)))/2,
    so the concurrence is sqrt((1-l1)(1-l2)) = 2*max(0, larger weight - 1/2).
    """
    for name, lam in (("lambda1", lambda1), ("lambda2", lambda2)):
        if not 0 <= lam <= 1:
            raise ValueError(f"{name} must lie in [0, 1], got {lam}")
    return math.sqrt((1 - lambda1) * (1 - lambda2))
