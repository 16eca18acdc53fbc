import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from tripartite_noise.channels import (
    KrausOperatorList,
    NoiseScenario,
    apply_channel,
    assemble_scenario,
    completeness_defect,
    depolarizing_kraus,
    scenario_for_kind,
)
from tripartite_noise.states import DensityMatrix, basis_state, density_from_pure, ghz_state, w_state
from tripartite_noise.tensor_core import SIGMA_X, SIGMA_Y, SIGMA_Z, distance_max_abs, kron, partial_trace, I2

ALL_SCENARIOS = (
    [NoiseScenario((q,)) for q in "abc"]
    + [NoiseScenario(pair, "correlated") for pair in (("a", "b"), ("a", "c"), ("b", "c"))]
    + [NoiseScenario(("a", "b", "c"), "correlated")]
    + [NoiseScenario(pair, "non_correlated") for pair in (("a", "b"), ("a", "c"), ("b", "c"))]
    + [NoiseScenario(("a", "b", "c"), "non_correlated")]
)

probabilities = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


def random_density(seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    m = a @ a.conj().T
    return DensityMatrix(m / np.trace(m).real)


def test_kraus_identity_channel():
    ops = depolarizing_kraus(0.0).operators
    assert np.array_equal(ops[0], np.eye(2))
    assert not ops[1:].any()


def test_kraus_weights_at_full_strength():
    ops = depolarizing_kraus(1.0).operators
    weights = [np.trace(k.conj().T @ k).real / 2 for k in ops]
    assert weights == pytest.approx([0, 1 / 3, 1 / 3, 1 / 3], abs=1e-15)


@pytest.mark.parametrize("bits", ["0", "1"])
def test_three_quarters_fully_depolarizes(bits):
    k = depolarizing_kraus(0.75)
    assert completeness_defect(k) <= 1e-14
    psi = basis_state(bits)
    rho = np.outer(psi, psi.conj())
    out = sum(op @ rho @ op.conj().T for op in k)
    assert np.allclose(out, np.eye(2) / 2, atol=1e-15)


@pytest.mark.parametrize("p", [-0.1, 1.1, float("nan")])
def test_kraus_rejects_bad_p(p):
    with pytest.raises(ValueError):
        depolarizing_kraus(p)


def test_kraus_order_is_identity_x_y_z():
    w = math.sqrt(0.2 / 3)
    ops = depolarizing_kraus(0.2).operators
    assert np.allclose(ops[1:], [w * SIGMA_X, w * SIGMA_Y, w * SIGMA_Z], atol=0)


@pytest.mark.parametrize("p", [0.0, 0.3, 0.77, 1.0])
def test_single_qubit_channel_is_cptp(p):
    assert completeness_defect(depolarizing_kraus(p)) <= 1e-14


@pytest.mark.parametrize("q", "abc")
def test_single_site_operators(q):
    k = assemble_scenario(NoiseScenario((q,), p=0.4))
    assert len(k) == 4 and k.dim == 8
    assert completeness_defect(k) <= 1e-14
    d = depolarizing_kraus(0.4).operators
    local = [I2, I2, I2]
    local["abc".index(q)] = d[2]
    assert np.allclose(k.operators[2], kron(*local), atol=0)


@pytest.mark.parametrize("p", [0.0, 0.25, 0.5, 0.75, 1.0])
def test_corr2_completeness_defect_matches_oracle(p):
    k = assemble_scenario(scenario_for_kind("corr2", p))
    assert len(k) == 4
    s = oracles.completeness_sum(oracles.three_site_ops("corr2", p))
    brute = math.sqrt(sum(abs(s[i][j] - (i == j)) ** 2 for i in range(8) for j in range(8)))
    closed = abs((1 - p) ** 2 + p**2 / 3 - 1) * math.sqrt(8)
    assert brute == pytest.approx(closed, abs=1e-12)
    assert completeness_defect(k) == pytest.approx(brute, abs=1e-12)


def test_corr3_completeness_defect_full_strength():
    assert completeness_defect(assemble_scenario(scenario_for_kind("corr3", 1.0))) == pytest.approx(
        (1 - 1 / 9) * math.sqrt(8), abs=1e-12
    )


@settings(max_examples=25, deadline=None)
@given(probabilities)
def test_noncorrelated_lists_are_cptp(p):
    k2 = assemble_scenario(scenario_for_kind("nc2", p))
    k3 = assemble_scenario(scenario_for_kind("nc3", p))
    assert len(k2) == 16 and len(k3) == 64
    assert completeness_defect(k2) <= 1e-12
    assert completeness_defect(k3) <= 1e-12


def test_nc3_uses_independent_index_per_site():
    k = assemble_scenario(scenario_for_kind("nc3", 0.6)).operators
    d = depolarizing_kraus(0.6).operators
    # branch (k, l, m) = (X, Y, Z) sits at flat index 1*16 + 2*4 + 3
    assert np.allclose(k[1 * 16 + 2 * 4 + 3], kron(d[1], d[2], d[3]), atol=0)


@pytest.mark.parametrize("kind", ["single", "corr2", "corr3", "nc2", "nc3"])
@pytest.mark.parametrize("label", ["GHZ", "W"])
def test_apply_matches_loop_oracle(kind, label):
    p = 0.37
    psi = ghz_state() if label == "GHZ" else w_state()
    rho = density_from_pure(psi)
    expected = oracles.kraus_sum(oracles.three_site_ops(kind, p), oracles.projector(list(psi)))
    out = apply_channel(rho, assemble_scenario(scenario_for_kind(kind, p)), "literal")
    assert distance_max_abs(out.matrix, np.array(expected)) <= 1e-14


@pytest.mark.parametrize("s", ALL_SCENARIOS, ids=lambda s: f"{s.kind}-{''.join(s.affected_qubits)}")
def test_zero_strength_is_identity(s):
    rho = random_density(1)
    out = apply_channel(rho, assemble_scenario(s.at(0.0)), "literal")
    assert distance_max_abs(out.matrix, rho.matrix) <= 1e-14


def test_corr2_literal_trace():
    rho = density_from_pure(ghz_state())
    out = apply_channel(rho, assemble_scenario(scenario_for_kind("corr2", 0.5)), "literal")
    oracle = oracles.kraus_sum(oracles.three_site_ops("corr2", 0.5), oracles.projector(oracles.ghz_amplitudes()))
    oracle_trace = sum(oracle[i][i] for i in range(8)).real
    assert oracle_trace == pytest.approx(1 / 3, abs=1e-14)
    assert out.trace == pytest.approx(oracle_trace, abs=1e-14)
    assert out.trace == pytest.approx((1 - 0.5) ** 2 + 0.5**2 / 3, abs=1e-14)


def test_renormalize_marks_unit_contract():
    rho = density_from_pure(ghz_state())
    out = apply_channel(rho, assemble_scenario(scenario_for_kind("corr3", 0.9)), "renormalize")
    assert out.trace_contract == "unit"
    assert out.trace == pytest.approx(1, abs=1e-14)


def test_apply_dim_mismatch():
    with pytest.raises(ValueError):
        apply_channel(DensityMatrix(np.eye(2) / 2), assemble_scenario(scenario_for_kind("single", 0.1)))


def test_renormalize_rejects_vanishing_trace():
    zero = KrausOperatorList(np.zeros((1, 8, 8)), 0.0)
    with pytest.raises(ValueError):
        apply_channel(density_from_pure(ghz_state()), zero, "renormalize")


def test_scenario_validation():
    with pytest.raises(ValueError):
        NoiseScenario(())
    with pytest.raises(ValueError):
        NoiseScenario(("d",))
    with pytest.raises(ValueError):
        NoiseScenario(("a",), p=2.0)
    with pytest.raises(ValueError):
        NoiseScenario(("a", "b"), "sometimes")
    assert NoiseScenario(("c", "a"), "non_correlated").affected_qubits == ("a", "c")
    assert NoiseScenario(("b",), "non_correlated").kind == "single"


@settings(max_examples=20, deadline=None)
@given(probabilities, st.sampled_from(ALL_SCENARIOS), st.integers(0, 2**16))
def test_literal_output_hermitian_psd(p, s, seed):
    out = apply_channel(random_density(seed), assemble_scenario(s.at(p)), "literal")
    m = out.matrix
    assert np.max(np.abs(m - m.conj().T)) <= 1e-12
    assert np.linalg.eigvalsh(m)[0] >= -1e-9
    if s.trace_preserving:
        assert out.trace == pytest.approx(1, abs=1e-12)


def _sequential(rho, sites, p):
    for q in sites:
        rho = apply_channel(rho, assemble_scenario(NoiseScenario((q,), p=p)), "literal")
    return rho


@settings(max_examples=20, deadline=None)
@given(probabilities, st.integers(0, 2**16))
def test_noncorrelated_equals_sequential(p, seed):
    rho = random_density(seed)
    for sites in (("a", "b"), ("a", "c"), ("b", "c"), ("a", "b", "c")):
        joint = apply_channel(rho, assemble_scenario(NoiseScenario(sites, "non_correlated", p)), "literal")
        assert distance_max_abs(joint.matrix, _sequential(rho, sites, p).matrix) <= 1e-12


@settings(max_examples=20, deadline=None)
@given(probabilities, st.floats(0, 1), st.sampled_from(ALL_SCENARIOS), st.integers(0, 2**16))
def test_channel_is_linear(p, alpha, s, seed):
    r1, r2 = random_density(seed), random_density(seed + 1)
    k = assemble_scenario(s.at(p))
    mix = DensityMatrix(alpha * r1.matrix + (1 - alpha) * r2.matrix)
    lhs = apply_channel(mix, k, "literal").matrix
    rhs = alpha * apply_channel(r1, k, "literal").matrix + (1 - alpha) * apply_channel(r2, k, "literal").matrix
    assert distance_max_abs(lhs, rhs) <= 1e-12


@pytest.mark.parametrize("q", "abc")
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_three_quarters_leaves_affected_qubit_maximally_mixed(q, seed):
    out = apply_channel(random_density(seed), assemble_scenario(NoiseScenario((q,), p=0.75)), "literal")
    assert np.allclose(partial_trace(out.matrix, q), np.eye(2) / 2, atol=1e-14)
