"""Dense complex linear algebra for 1- to 3-qubit operators.

Basis convention shared by the whole package: qubit ``a`` is the most
significant bit, so the row index of ``|q_a q_b q_c>`` is ``4*q_a + 2*q_b + q_c``.
"""
from __future__ import annotations

from functools import reduce

import numpy as np

HERMITICITY_TOL = 1e-10
NEGATIVE_EIG_TOL = 1e-9

QUBITS = ("a", "b", "c")

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def qubit_index(qubit) -> int:
    """Map ``'a'/'b'/'c'`` (or 0/1/2) to a position, 0 being most significant."""
    if isinstance(qubit, str):
        if qubit not in QUBITS:
            raise ValueError(f"unknown qubit label {qubit!r}")
        return QUBITS.index(qubit)
    q = int(qubit)
    if q not in (0, 1, 2):
        raise ValueError(f"qubit index out of range: {qubit!r}")
    return q


def kron(*ops: np.ndarray) -> np.ndarray:
    """Kronecker product, leftmost factor on the most significant qubit."""
    return reduce(np.kron, (np.asarray(o, dtype=complex) for o in ops))


def dagger(a: np.ndarray) -> np.ndarray:
    return np.asarray(a).conj().T


def hermiticity_defect(m: np.ndarray) -> float:
    m = np.asarray(m)
    return float(np.max(np.abs(m - m.conj().T)))


def distance_max_abs(a: np.ndarray, b: np.ndarray) -> float:
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b)))


def _check_three_qubit(rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho)
    if rho.shape != (8, 8):
        raise ValueError(f"expected an 8x8 matrix, got shape {rho.shape}")
    return rho


def partial_transpose(rho: np.ndarray, qubit) -> np.ndarray:
    """Transpose the row/column index pair of one qubit of a 3-qubit operator."""
    rho = _check_three_qubit(rho)
    q = qubit_index(qubit)
    axes = list(range(6))
    axes[q], axes[q + 3] = axes[q + 3], axes[q]
    return rho.reshape((2,) * 6).transpose(axes).reshape(8, 8)


def partial_trace(rho: np.ndarray, keep) -> np.ndarray:
    """Reduced operator on the qubits in ``keep`` (labels or indices), in a-b-c order."""
    rho = _check_three_qubit(rho)
    kept = sorted({qubit_index(q) for q in keep})
    traced = [q for q in range(3) if q not in kept]
    t = rho.reshape((2,) * 6)
    # trace out from the highest axis down so lower axis numbers stay valid
    n = 3
    for q in sorted(traced, reverse=True):
        t = np.trace(t, axis1=q, axis2=q + n)
        n -= 1
    d = 2 ** len(kept)
    return t.reshape(d, d)


def hermitian_eigh(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and eigenvectors (columns) of a Hermitian matrix."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    defect = hermiticity_defect(m)
    if defect > HERMITICITY_TOL:
        raise ValueError(f"matrix is not Hermitian (defect {defect:.3e})")
    # symmetrize away the sub-tolerance defect so eigh sees an exact Hermitian input
    return np.linalg.eigh(0.5 * (m + m.conj().T))


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    return hermitian_eigh(m)[0]
