"""Dense complex linear algebra for 2x2 and 4x4 Hermitian-centric numerics.

Two-mode (4x4) matrices use the fixed basis order {|00>, |01>, |10>, |11>}
with the first tensor factor being subsystem A. All functions are pure and
never mutate their inputs.
"""

from __future__ import annotations

import numpy as np

DEFAULT_TOL = 1e-10
PSD_CLAMP = 1e-12


def as_matrix(m, dims: tuple[int, ...] = (2, 4)) -> np.ndarray:
    """Coerce to a square complex array of admitted dimension, rejecting NaN/Inf."""
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] not in dims:
        raise ValueError(f"expected dimension in {dims}, got {a.shape[0]}")
    if not np.all(np.isfinite(a.view(float))):
        raise ValueError("matrix contains non-finite entries")
    return a


def is_hermitian(m, tol: float = DEFAULT_TOL) -> bool:
    a = as_matrix(m)
    return bool(np.abs(a - a.conj().T).max() <= tol)


def is_unitary(m, tol: float = DEFAULT_TOL) -> bool:
    a = as_matrix(m)
    return bool(np.abs(a @ a.conj().T - np.eye(a.shape[0])).max() <= tol)


def is_psd(m, tol: float = DEFAULT_TOL) -> bool:
    a = as_matrix(m)
    if not is_hermitian(a, tol):
        return False
    return bool(np.linalg.eigvalsh(a).min() >= -tol)


def trace_one(m, tol: float = DEFAULT_TOL) -> bool:
    return bool(abs(as_matrix(m).trace() - 1.0) <= tol)


def check_density_matrix(m, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Validate Hermiticity, unit trace and positivity; return the coerced array."""
    a = as_matrix(m)
    if not is_hermitian(a, tol):
        raise ValueError("density matrix must be Hermitian")
    if not trace_one(a, tol):
        raise ValueError(f"density matrix must have unit trace, got {a.trace()}")
    lo = np.linalg.eigvalsh(a).min()
    if lo < -tol:
        raise ValueError(f"density matrix must be positive semidefinite, min eigenvalue {lo}")
    return a


def tensor(a, b) -> np.ndarray:
    """Kronecker product of two 2x2 matrices; first factor is subsystem A."""
    return np.kron(as_matrix(a, dims=(2,)), as_matrix(b, dims=(2,)))


def partial_trace(m, keep: str = "A") -> np.ndarray:
    """Trace a 4x4 two-mode matrix down to the kept subsystem ('A' or 'B')."""
    a = as_matrix(m, dims=(4,)).reshape(2, 2, 2, 2)
    if keep == "A":
        return np.trace(a, axis1=1, axis2=3)
    if keep == "B":
        return np.trace(a, axis1=0, axis2=2)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def partial_transpose(m, on: str = "A") -> np.ndarray:
    """Transpose one subsystem of a 4x4 two-mode matrix."""
    a = as_matrix(m, dims=(4,)).reshape(2, 2, 2, 2)
    if on == "A":
        return a.transpose(2, 1, 0, 3).reshape(4, 4)
    if on == "B":
        return a.transpose(0, 3, 2, 1).reshape(4, 4)
    raise ValueError(f"on must be 'A' or 'B', got {on!r}")


def eig_hermitian(m, tol: float = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending, real) and orthonormal eigenvector columns.

    Rejects non-Hermitian input; the decomposition is performed on the
    Hermitian average (m + m†)/2 so roundoff asymmetry cannot leak in.
    """
    a = as_matrix(m)
    if not is_hermitian(a, tol):
        raise ValueError("eig_hermitian requires a Hermitian matrix")
    w, v = np.linalg.eigh((a + a.conj().T) / 2)
    return w[::-1].copy(), v[:, ::-1].copy()


def sqrt_psd(m, clamp: float = PSD_CLAMP) -> np.ndarray:
    """Hermitian square root of a positive semidefinite matrix.

    Eigenvalues in [-clamp, 0) are treated as roundoff and clamped to zero;
    anything below -clamp is rejected.
    """
    w, v = eig_hermitian(m)
    if w.min() < -clamp:
        raise ValueError(f"matrix is not PSD: min eigenvalue {w.min()} < -{clamp}")
    root = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    return (root + root.conj().T) / 2


def trace_norm_hermitian(m, tol: float = DEFAULT_TOL) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    w, _ = eig_hermitian(m, tol)
    return float(np.abs(w).sum())
