"""Depolarizing Kraus operators and the one/two/three-site noise scenarios.

The correlated multi-site maps put the *same* Kraus branch on every affected
qubit while keeping the single-site weights, so they are completely positive
but not trace preserving: for two sites ``sum K^dag K = ((1-p)^2 + p^2/3) I``.
They are kept that way on purpose and the loss is reported through
:func:`completeness_defect`; ``normalization="renormalize"`` divides it out.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .states import DensityMatrix
from .tensor_core import I2, QUBITS, SIGMA_X, SIGMA_Y, SIGMA_Z, kron, qubit_index

Correlation = Literal["correlated", "non_correlated"]
Normalization = Literal["literal", "renormalize"]

DEGENERATE_TRACE = 1e-14


@dataclass(frozen=True)
class KrausOperatorList:
    operators: np.ndarray  # shape (n_ops, dim, dim)
    p: float

    def __post_init__(self):
        ops = np.array(self.operators, dtype=complex)
        if ops.ndim != 3 or ops.shape[1] != ops.shape[2]:
            raise ValueError(f"operators must stack to (n, d, d), got {ops.shape}")
        ops.setflags(write=False)
        object.__setattr__(self, "operators", ops)

    def __len__(self):
        return self.operators.shape[0]

    def __iter__(self):
        return iter(self.operators)

    @property
    def dim(self) -> int:
        return self.operators.shape[1]


@dataclass(frozen=True)
class NoiseScenario:
    """Which qubits are hit, how, how hard, and what to do with lost trace."""

    affected_qubits: tuple[str, ...]
    correlation: Correlation = "correlated"
    p: float = 0.0
    normalization: Normalization = "renormalize"

    def __post_init__(self):
        sites = tuple(QUBITS[i] for i in sorted({qubit_index(q) for q in self.affected_qubits}))
        if not sites:
            raise ValueError("a scenario needs at least one affected qubit")
        if self.correlation not in ("correlated", "non_correlated"):
            raise ValueError(f"unknown correlation {self.correlation!r}")
        if self.normalization not in ("literal", "renormalize"):
            raise ValueError(f"unknown normalization {self.normalization!r}")
        _check_p(self.p)
        object.__setattr__(self, "affected_qubits", sites)
        object.__setattr__(self, "p", float(self.p))

    @property
    def kind(self) -> str:
        """One of ``single``, ``corr2``, ``corr3``, ``nc2``, ``nc3``."""
        n = len(self.affected_qubits)
        if n == 1:
            return "single"
        return f"{'corr' if self.correlation == 'correlated' else 'nc'}{n}"

    @property
    def trace_preserving(self) -> bool:
        return self.kind in ("single", "nc2", "nc3")

    def at(self, p: float) -> "NoiseScenario":
        return NoiseScenario(self.affected_qubits, self.correlation, p, self.normalization)


SCENARIO_KINDS = ("single", "corr2", "corr3", "nc2", "nc3")


def scenario_for_kind(kind: str, p: float = 0.0, normalization: Normalization = "renormalize") -> NoiseScenario:
    """Canonical scenario for a kind label: sites start at qubit ``a``."""
    table = {
        "single": (("a",), "correlated"),
        "corr2": (("a", "b"), "correlated"),
        "corr3": (("a", "b", "c"), "correlated"),
        "nc2": (("a", "b"), "non_correlated"),
        "nc3": (("a", "b", "c"), "non_correlated"),
    }
    try:
        sites, corr = table[kind]
    except KeyError:
        raise ValueError(f"unknown scenario kind {kind!r}") from None
    return NoiseScenario(sites, corr, p, normalization)


def _check_p(p):
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"channel strength p must lie in [0, 1], got {p!r}")


def depolarizing_kraus(p: float) -> KrausOperatorList:
    """Single-qubit depolarizing branches, fixed order (I, X, Y, Z)."""
    _check_p(p)
    w0, w1 = np.sqrt(1 - p), np.sqrt(p / 3)
    return KrausOperatorList(np.stack([w0 * I2, w1 * SIGMA_X, w1 * SIGMA_Y, w1 * SIGMA_Z]), p)


def _lift(local: dict[int, np.ndarray]) -> np.ndarray:
    return kron(*(local.get(q, I2) for q in range(3)))


def assemble_scenario(s: NoiseScenario) -> KrausOperatorList:
    d = depolarizing_kraus(s.p).operators
    sites = [qubit_index(q) for q in s.affected_qubits]
    if len(sites) == 1 or s.correlation == "correlated":
        # shared branch index k on every affected site
        ops = [_lift({q: d[k] for q in sites}) for k in range(4)]
    else:
        # independent index per site, first site varying slowest
        factors = [d if q in sites else I2[None] for q in range(3)]
        ops = np.einsum("aij,bkl,cmn->abcikmjln", *factors).reshape(-1, 8, 8)
        return KrausOperatorList(ops, s.p)
    return KrausOperatorList(np.stack(ops), s.p)


def completeness_defect(kraus: KrausOperatorList) -> float:
    ops = kraus.operators
    total = (ops.conj().transpose(0, 2, 1) @ ops).sum(axis=0)
    return float(np.linalg.norm(total - np.eye(kraus.dim), "fro"))


def kraus_sum(matrix: np.ndarray, kraus: KrausOperatorList) -> np.ndarray:
    ops = kraus.operators
    return (ops @ np.asarray(matrix) @ ops.conj().transpose(0, 2, 1)).sum(axis=0)


def apply_channel(
    rho: DensityMatrix, kraus: KrausOperatorList, normalization: Normalization = "literal"
) -> DensityMatrix:
    if rho.dim != kraus.dim:
        raise ValueError(f"dimension mismatch: state {rho.dim}, operators {kraus.dim}")
    out = kraus_sum(rho.matrix, kraus)
    if normalization == "literal":
        return DensityMatrix(out, "literal")
    if normalization != "renormalize":
        raise ValueError(f"unknown normalization {normalization!r}")
    tr = float(np.trace(out).real)
    if tr <= DEGENERATE_TRACE:
        raise ValueError(f"output trace {tr!r} too small to renormalize")
    return DensityMatrix(out / tr, "unit")


def apply_scenario(rho: DensityMatrix, s: NoiseScenario) -> DensityMatrix:
    return apply_channel(rho, assemble_scenario(s), s.normalization)
