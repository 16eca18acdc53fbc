"""Bipartite and tripartite negativity, p-sweeps, death points and revivals."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import NoiseScenario, apply_channel, assemble_scenario
from .states import TRACE_TOL, DensityMatrix, density_from_pure, initial_state
from .tensor_core import NEGATIVE_EIG_TOL, QUBITS, hermitian_eigenvalues, partial_transpose

DEATH_TOL = 1e-9
REVIVAL_TOL = 1e-6
SCAN_STEP = 0.01


@dataclass(frozen=True)
class NegativityTriple:
    n_a_bc: float
    n_b_ac: float
    n_c_ab: float

    @property
    def tripartite(self) -> float:
        prod = self.n_a_bc * self.n_b_ac * self.n_c_ab
        return float(np.cbrt(prod)) if prod > 0 else 0.0

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.n_a_bc, self.n_b_ac, self.n_c_ab, self.tripartite)


@dataclass(frozen=True)
class SweepResult:
    state_label: str
    scenario: NoiseScenario
    p_values: tuple[float, ...]
    triples: tuple[NegativityTriple, ...]
    traces_before_normalization: tuple[float, ...]

    @property
    def tripartite(self) -> np.ndarray:
        return np.array([t.tripartite for t in self.triples])


def _unit_matrix(rho) -> np.ndarray:
    if isinstance(rho, DensityMatrix):
        m = rho.matrix
    else:
        m = np.asarray(rho, dtype=complex)
    tr = np.trace(m).real
    if abs(tr - 1) > TRACE_TOL:
        raise ValueError(f"negativity needs a unit-trace state, got trace {tr!r}")
    return m


def bipartite_negativity(rho, qubit) -> float:
    """-2 times the sum of the clearly negative eigenvalues of the partial transpose."""
    m = _unit_matrix(rho)
    eig = hermitian_eigenvalues(partial_transpose(m, qubit))
    return max(0.0, float(-2.0 * eig[eig < -NEGATIVE_EIG_TOL].sum()))


def tripartite_negativity(rho) -> NegativityTriple:
    return NegativityTriple(*(bipartite_negativity(rho, q) for q in QUBITS))


def noisy_state(state_label: str, scenario: NoiseScenario, p: float | None = None) -> DensityMatrix:
    s = scenario if p is None else scenario.at(p)
    rho0 = density_from_pure(initial_state(state_label))
    return apply_channel(rho0, assemble_scenario(s), s.normalization)


def evaluate(state_label: str, scenario: NoiseScenario, p: float) -> tuple[NegativityTriple, float]:
    """Negativities of the evolved state at ``p`` and the raw output trace."""
    s = scenario.at(p)
    rho0 = density_from_pure(initial_state(state_label))
    raw = apply_channel(rho0, assemble_scenario(s), "literal")
    return tripartite_negativity(raw.normalized()), raw.trace


def sweep(state_label: str, scenario: NoiseScenario, p_grid) -> SweepResult:
    ps = [float(p) for p in p_grid]
    if any(b <= a for a, b in zip(ps, ps[1:])):
        raise ValueError("p grid must be strictly increasing")
    triples, traces = [], []
    for p in ps:
        t, tr = evaluate(state_label, scenario, p)
        triples.append(t)
        traces.append(tr)
    return SweepResult(state_label.upper(), scenario, tuple(ps), tuple(triples), tuple(traces))


def _tripartite_at(state_label, scenario, p) -> float:
    return evaluate(state_label, scenario, p)[0].tripartite


def find_death_point(
    state_label: str, scenario: NoiseScenario, bracket=(0.0, 1.0), tol: float = 1e-4
) -> float | None:
    """First p in ``bracket`` where the tripartite negativity reaches zero.

    A coarse scan comes first because negativity can revive; bisection
    alone could land on a later zero.
    """
    lo, hi = float(bracket[0]), float(bracket[1])
    if not (0.0 <= lo < hi <= 1.0):
        raise ValueError(f"invalid bracket {bracket!r}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if _tripartite_at(state_label, scenario, lo) <= DEATH_TOL:
        raise ValueError(f"tripartite negativity already zero at p={lo}")
    n = max(1, int(round((hi - lo) / SCAN_STEP)))
    grid = np.linspace(lo, hi, n + 1)
    prev = lo
    for p in grid[1:]:
        if _tripartite_at(state_label, scenario, p) <= DEATH_TOL:
            a, b = prev, float(p)
            while b - a > tol:
                mid = 0.5 * (a + b)
                if _tripartite_at(state_label, scenario, mid) <= DEATH_TOL:
                    b = mid
                else:
                    a = mid
            return b
        prev = float(p)
    return None


def detect_revival(result) -> tuple[float, float] | None:
    """First (death p, revival p) grid pair, or None if the series never revives.

    Accepts a :class:`SweepResult` or a ``(p_values, tripartite_values)`` pair.
    """
    if isinstance(result, SweepResult):
        ps, vals = result.p_values, result.tripartite
    else:
        ps, vals = result
    death = None
    for p, v in zip(ps, vals):
        if death is None:
            if v <= DEATH_TOL:
                death = float(p)
        elif v > REVIVAL_TOL:
            return death, float(p)
    return None
