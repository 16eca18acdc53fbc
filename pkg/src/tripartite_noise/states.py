"""Initial GHZ / W states and density-matrix bookkeeping."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .tensor_core import hermitian_eigenvalues, hermiticity_defect

TraceContract = Literal["unit", "literal"]

NORM_TOL = 1e-12
TRACE_TOL = 1e-10


@dataclass(frozen=True)
class DensityMatrix:
    """An 8x8 density matrix plus what its trace is promised to be.

    ``unit`` states have trace 1.  ``literal`` states are raw Kraus sums of a
    map that need not preserve trace, so their trace lies in (0, 1].
    """

    matrix: np.ndarray
    trace_contract: TraceContract = "unit"

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"density matrix must be square, got shape {m.shape}")
        if self.trace_contract not in ("unit", "literal"):
            raise ValueError(f"unknown trace contract {self.trace_contract!r}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix).real)

    def normalized(self) -> "DensityMatrix":
        tr = self.trace
        if tr <= 0:
            raise ValueError(f"cannot normalize a matrix with trace {tr!r}")
        return DensityMatrix(self.matrix / tr, "unit")


@dataclass(frozen=True)
class DensityDiagnostics:
    hermiticity_defect: float
    min_eigenvalue: float
    trace: float


def ghz_state() -> np.ndarray:
    psi = np.zeros(8, dtype=complex)
    psi[[0, 7]] = 1 / np.sqrt(2)
    return psi


def w_state() -> np.ndarray:
    psi = np.zeros(8, dtype=complex)
    psi[[4, 2, 1]] = 1 / np.sqrt(3)
    return psi


def basis_state(bits: str) -> np.ndarray:
    """Computational basis ket, e.g. ``basis_state('010')``."""
    psi = np.zeros(2 ** len(bits), dtype=complex)
    psi[int(bits, 2)] = 1
    return psi


def initial_state(label: str) -> np.ndarray:
    key = label.upper()
    if key == "GHZ":
        return ghz_state()
    if key == "W":
        return w_state()
    raise ValueError(f"unknown state label {label!r} (expected GHZ or W)")


def density_from_pure(psi: np.ndarray) -> DensityMatrix:
    psi = np.asarray(psi, dtype=complex)
    norm = np.linalg.norm(psi)
    if abs(norm - 1) > NORM_TOL:
        raise ValueError(f"state is not normalized (norm {norm!r})")
    return DensityMatrix(np.outer(psi, psi.conj()), "unit")


def validate_density(rho) -> DensityDiagnostics:
    """Measure Hermiticity defect, smallest eigenvalue and trace.

    Nothing is asserted here; callers compare the numbers to their own
    contract.  The eigenvalue comes from the Hermitian part so a slightly
    non-Hermitian input still gets a meaningful reading.
    """
    m = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    herm = 0.5 * (m + m.conj().T)
    return DensityDiagnostics(
        hermiticity_defect=hermiticity_defect(m),
        min_eigenvalue=float(hermitian_eigenvalues(herm)[0]),
        trace=float(np.trace(m).real),
    )
