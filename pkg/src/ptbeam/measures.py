"""Nonclassicality measures on two-mode states.

Implements measurement-induced disturbance (mutual-information loss under
local projective measurement in the marginal eigenbases), Wootters
concurrence, and negativity, plus the input-state potentials obtained by
pushing a qubit through the balanced beam-splitter first.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .beamsplitter import QubitState, bs_output

ENTROPY_CLAMP = 1e-12
DEGENERACY_TOL = 1e-10

_SIGMA_Y = np.array([[0, -1j], [1j, 0]])
_SPIN_FLIP = np.kron(_SIGMA_Y, _SIGMA_Y).real  # real symmetric


@dataclass(frozen=True)
class MeasureReport:
    mid: float
    concurrence: float
    negativity: float


def entropy(rho, tol: float = linalg.DEFAULT_TOL) -> float:
    """Von Neumann entropy in bits; eigenvalues below 1e-12 are dropped."""
    a = linalg.check_density_matrix(rho, tol)
    w = np.linalg.eigvalsh(a)
    w = w[w > ENTROPY_CLAMP]
    return float(-(w * np.log2(w)).sum())


def mutual_information(rho, tol: float = linalg.DEFAULT_TOL) -> float:
    """S(rho_A) + S(rho_B) - S(rho) for a 4x4 two-mode state."""
    a = linalg.check_density_matrix(linalg.as_matrix(rho, dims=(4,)), tol)
    return (
        entropy(linalg.partial_trace(a, "A"), tol)
        + entropy(linalg.partial_trace(a, "B"), tol)
        - entropy(a, tol)
    )


def _local_projectors(r2: np.ndarray, degeneracy_tol: float) -> list[np.ndarray]:
    """Spectral projectors of a single-qubit marginal.

    A degenerate marginal leaves the measurement basis undetermined; the
    tie-break fixes it to the computational basis so results are reproducible.
    """
    w, v = linalg.eig_hermitian(r2)
    if w[0] - w[1] <= degeneracy_tol:
        return [np.diag([1.0, 0.0]).astype(complex), np.diag([0.0, 1.0]).astype(complex)]
    return [np.outer(v[:, k], v[:, k].conj()) for k in range(2)]


def mid(rho, tol: float = linalg.DEFAULT_TOL, degeneracy_tol: float = DEGENERACY_TOL) -> float:
    """Measurement-induced disturbance Q = I(rho) - I(Pi(rho)).

    Pi projects with products of the marginals' spectral projectors; a state
    already diagonal in those local bases is unchanged and scores zero.
    """
    a = linalg.check_density_matrix(linalg.as_matrix(rho, dims=(4,)), tol)
    proj_a = _local_projectors(linalg.partial_trace(a, "A"), degeneracy_tol)
    proj_b = _local_projectors(linalg.partial_trace(a, "B"), degeneracy_tol)
    measured = np.zeros_like(a)
    for pa in proj_a:
        for pb in proj_b:
            full = np.kron(pa, pb)
            measured += full @ a @ full
    return mutual_information(a, tol) - mutual_information(measured, tol)


def concurrence(rho, tol: float = linalg.DEFAULT_TOL) -> float:
    """Wootters concurrence max(0, l1 - l2 - l3 - l4) of a two-qubit state.

    The l_i are the eigenvalues of sqrt(sqrt(rho) rho~ sqrt(rho)) with
    rho~ = (sy (x) sy) rho* (sy (x) sy), computed here as the singular values
    of M = sqrt(rho) (sy (x) sy) conj(sqrt(rho)): M M† equals the matrix
    under the outer square root, and singular values avoid the half-precision
    loss of square-rooting near-zero eigenvalues.
    """
    a = linalg.check_density_matrix(linalg.as_matrix(rho, dims=(4,)), tol)
    root = linalg.sqrt_psd(a)
    m = root @ _SPIN_FLIP @ np.conj(root)
    lam = np.linalg.svd(m, compute_uv=False)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def negativity(rho, tol: float = linalg.DEFAULT_TOL, via: str = "spectrum") -> float:
    """Negativity of a two-qubit state from its partial transpose on A.

    via="spectrum" sums (|l| - l)/2 over partial-transpose eigenvalues;
    via="trace-norm" evaluates (||rho^PT||_1 - 1)/2. The two agree to
    roundoff and are both exposed for cross-checking.
    """
    a = linalg.check_density_matrix(linalg.as_matrix(rho, dims=(4,)), tol)
    pt = linalg.partial_transpose(a, "A")
    if via == "spectrum":
        w, _ = linalg.eig_hermitian(pt, tol)
        return float(((np.abs(w) - w) / 2).sum())
    if via == "trace-norm":
        return float((linalg.trace_norm_hermitian(pt, tol) - 1) / 2)
    raise ValueError(f"via must be 'spectrum' or 'trace-norm', got {via!r}")


def measure_report(rho, tol: float = linalg.DEFAULT_TOL) -> MeasureReport:
    return MeasureReport(
        mid=mid(rho, tol),
        concurrence=concurrence(rho, tol),
        negativity=negativity(rho, tol),
    )


def potentials(q: QubitState) -> tuple[float, float]:
    """Concurrence and negativity potentials: the measures of bs_output(q)."""
    out = bs_output(q)
    return concurrence(out), negativity(out)
