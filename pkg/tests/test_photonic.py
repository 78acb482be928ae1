import math

import numpy as np
import pytest

from qhelpers import random_density, trace_distance
from gadbounds.channels import (
    ad_channel,
    apply,
    bath_from_temperature,
    choi_distance,
    gad_channel,
    gibbs_state,
    iad_channel,
    identity_channel,
)
from gadbounds.errors import TooFewResamples, WrongDim, ZeroShots
from gadbounds.photonic import (
    Branch,
    CircuitConfig,
    CountTable,
    cz_gate,
    damping_from_process,
    gad_from_circuit,
    hwp_jones,
    monte_carlo_errors,
    reconstruct_state,
    run_tomography,
    simulate_branch,
    simulate_counts,
)
from gadbounds.qmat import DensityMatrix, bloch_to_rho, rho_to_bloch

H_STATE = bloch_to_rho((0.0, 0.0, 1.0))
D_STATE = bloch_to_rho((1.0, 0.0, 0.0))


class TestOptics:
    def test_hwp_at_zero(self):
        assert np.allclose(hwp_jones(0.0), np.diag([1.0, -1.0]), atol=1e-15)

    def test_hwp_at_quarter_pi_swaps(self):
        assert np.allclose(hwp_jones(math.pi / 4), [[0, 1], [1, 0]], atol=1e-12)

    def test_hwp_at_eighth_pi_balanced(self):
        s = 1.0 / math.sqrt(2.0)
        assert np.allclose(hwp_jones(math.pi / 8), [[s, s], [s, -s]], atol=1e-12)

    def test_hwp_unitary_self_inverse(self):
        rng = np.random.default_rng(0)
        for theta in rng.uniform(-math.pi, math.pi, size=20):
            r = hwp_jones(theta)
            assert np.max(np.abs(r @ r.conj().T - np.eye(2))) < 1e-12
            assert np.max(np.abs(r @ r - np.eye(2))) < 1e-12

    def test_cz(self):
        cz = cz_gate()
        assert np.allclose(cz, np.diag([1, 1, 1, -1]), atol=1e-15)
        assert np.max(np.abs(cz @ cz - np.eye(4))) < 1e-15
        hh = np.zeros(4)
        hh[0] = 1.0
        assert np.allclose(cz @ hh, hh)
        vv = np.zeros(4)
        vv[3] = 1.0
        assert np.allclose(cz @ vv, -vv)


class TestBranchCircuit:
    def test_theta_zero_is_identity(self):
        ch = simulate_branch(D_STATE, CircuitConfig(theta=0.0, branch=Branch.AD))
        assert choi_distance(ch, identity_channel()) < 1e-12

    def test_full_damping_at_eighth_pi(self):
        ch = simulate_branch(D_STATE, CircuitConfig(theta=math.pi / 8, branch=Branch.AD))
        assert choi_distance(ch, ad_channel(1.0)) < 1e-12

    def test_iad_at_half_damping(self):
        theta = math.pi / 16  # sin^2(4 theta) = 1/2
        cfg = CircuitConfig(theta=theta, branch=Branch.IAD)
        assert abs(cfg.eta - 0.5) < 1e-15
        ch = simulate_branch(D_STATE, cfg)
        assert choi_distance(ch, iad_channel(0.5)) < 1e-10

    def test_negative_cosine_region_needs_z_correction(self):
        theta = 0.5  # cos(4 theta) < 0
        eta = math.sin(4.0 * theta) ** 2
        ch = simulate_branch(D_STATE, CircuitConfig(theta=theta, branch=Branch.AD))
        assert choi_distance(ch, ad_channel(eta)) < 1e-10

    def test_branch_grid_all_angles(self):
        rng = np.random.default_rng(1)
        worst = 0.0
        for theta in np.linspace(-math.pi / 2, math.pi / 2, 50):
            eta = math.sin(4.0 * theta) ** 2
            rho = random_density(rng)
            ad = simulate_branch(rho, CircuitConfig(theta=theta, branch=Branch.AD))
            iad = simulate_branch(rho, CircuitConfig(theta=theta, branch=Branch.IAD))
            worst = max(worst, choi_distance(ad, ad_channel(eta)))
            worst = max(worst, choi_distance(iad, iad_channel(eta)))
        assert worst < 1e-10

    def test_rejects_non_qubit(self):
        with pytest.raises(WrongDim):
            simulate_branch(DensityMatrix(np.eye(4) / 4), CircuitConfig(theta=0.1))

    def test_p_mix_validation(self):
        with pytest.raises(ValueError):
            CircuitConfig(theta=0.1, p_mix=1.5)


class TestGadFromCircuit:
    def test_theta_zero_identity(self):
        bath = bath_from_temperature(0.34)
        assert choi_distance(gad_from_circuit(0.0, bath), identity_channel()) < 1e-12

    def test_full_damping_reaches_equilibrium(self):
        bath = bath_from_temperature(0.34)
        ch = gad_from_circuit(math.pi / 8, bath)
        eq = gibbs_state(bath)
        rng = np.random.default_rng(2)
        for _ in range(5):
            out = apply(ch, random_density(rng))
            assert np.max(np.abs(out.mat - eq.mat)) < 1e-12

    def test_bloch_anchor(self):
        bath = bath_from_temperature(0.34)
        ch = gad_from_circuit(math.pi / 16, bath)  # eta = 0.5
        b = rho_to_bloch(apply(ch, D_STATE))
        assert abs(b.x - 0.7071067811865476) < 1e-12
        assert abs(b.z - (-0.44984480313119224)) < 1e-12

    def test_equivalence_grid(self):
        worst = 0.0
        for t in (0.1, 0.34, 1.0, 2.0, 5.0):
            bath = bath_from_temperature(t)
            for theta in np.linspace(0.0, math.pi / 2, 50):
                ch = gad_from_circuit(theta, bath)
                eta = math.sin(4.0 * theta) ** 2
                worst = max(worst, choi_distance(ch, gad_channel(bath, eta)))
        assert worst < 1e-10

    def test_eta_recovered_from_process(self):
        bath = bath_from_temperature(0.34)
        worst = 0.0
        for theta in np.linspace(0.0, math.pi / 2, 50):
            eta = math.sin(4.0 * theta) ** 2
            ch = gad_from_circuit(theta, bath)
            worst = max(worst, abs(damping_from_process(ch) - eta))
        assert worst < 1e-10


class TestCounts:
    def test_deterministic_outcome_for_eigenstate(self):
        counts = simulate_counts(H_STATE, 500, seed=1)
        assert counts.z == (500, 0)

    def test_deterministic_x_for_balanced_state(self):
        counts = simulate_counts(D_STATE, 10_000, seed=2)
        assert counts.x == (10_000, 0)

    def test_law_of_large_numbers(self):
        mixed = DensityMatrix(np.eye(2) / 2)
        shots = 1_000_000
        counts = simulate_counts(mixed, shots, seed=3)
        sigma = math.sqrt(0.25 * shots)
        for basis in (counts.x, counts.y, counts.z):
            assert abs(basis[0] - shots / 2) < 3.0 * sigma

    def test_seed_determinism(self):
        a = simulate_counts(D_STATE, 1000, seed=42)
        b = simulate_counts(D_STATE, 1000, seed=42)
        assert a == b
        c = simulate_counts(D_STATE, 1000, seed=43)
        assert a != c

    def test_zero_shots(self):
        with pytest.raises(ZeroShots):
            simulate_counts(H_STATE, 0, seed=1)

    def test_count_table_validation(self):
        with pytest.raises(ValueError):
            CountTable(shots_per_basis=10, x=(5, 4), y=(5, 5), z=(5, 5))
        with pytest.raises(ZeroShots):
            CountTable(shots_per_basis=0, x=(0, 0), y=(0, 0), z=(0, 0))


class TestReconstruction:
    def test_exact_eigenstate(self):
        counts = CountTable(100, x=(50, 50), y=(50, 50), z=(100, 0))
        rho = reconstruct_state(counts)
        assert np.max(np.abs(rho.mat - np.diag([1.0, 0.0]))) < 1e-15

    def test_balanced_counts_give_maximally_mixed(self):
        counts = CountTable(100, x=(50, 50), y=(50, 50), z=(50, 50))
        rho = reconstruct_state(counts)
        assert np.max(np.abs(rho.mat - np.eye(2) / 2)) < 1e-15

    def test_radial_projection(self):
        counts = CountTable(100, x=(100, 0), y=(100, 0), z=(100, 0))
        rho = reconstruct_state(counts)
        b = rho_to_bloch(rho)
        assert abs(b.norm() - 1.0) < 1e-12
        s = 1.0 / math.sqrt(3.0)
        assert np.allclose([b.x, b.y, b.z], [s, s, s], atol=1e-12)

    def test_calibration_trace_distance(self):
        bath = bath_from_temperature(0.34)
        truth = apply(gad_channel(bath, 0.5), D_STATE)
        hits = 0
        trials = 1000
        for trial in range(trials):
            counts = simulate_counts(truth, 10_000, seed=trial)
            if trace_distance(reconstruct_state(counts), truth) < 0.05:
                hits += 1
        assert hits >= 950


class TestMonteCarlo:
    def test_determinism(self):
        counts = simulate_counts(D_STATE, 10_000, seed=7)
        a = monte_carlo_errors(counts, resamples=50, seed=11)
        b = monte_carlo_errors(counts, resamples=50, seed=11)
        assert a == b

    def test_sigma_scale_for_balanced_state(self):
        # For |D> the x outcome is deterministic (q = 1) so its sigma
        # nearly vanishes; y and z fluctuate at the binomial standard
        # error 1/sqrt(shots) = 0.01.
        counts = simulate_counts(D_STATE, 10_000, seed=8)
        (sx, sy, sz), _ = monte_carlo_errors(counts, resamples=300, seed=9)
        assert sx < 0.003
        for s in (sy, sz):
            assert 0.01 / 3.0 < s < 0.01 * 3.0

    def test_sigma_shrinks_with_shots(self):
        mixed = DensityMatrix(np.eye(2) / 2)
        sig_small, _ = monte_carlo_errors(
            simulate_counts(mixed, 100_000, seed=10), resamples=200, seed=12
        )
        sig_large, _ = monte_carlo_errors(
            simulate_counts(mixed, 10_000_000, seed=10), resamples=200, seed=12
        )
        for a, b in zip(sig_small, sig_large):
            assert b < a / 10.0 * 2.0  # 1/sqrt(shots) scaling within factor 2

    def test_derived_quantities(self):
        bath = bath_from_temperature(0.34)
        truth = apply(gad_channel(bath, 0.5), D_STATE)
        counts = simulate_counts(truth, 10_000, seed=13)

        def purity(rho):
            return {"purity": float(np.trace(rho.mat @ rho.mat).real)}

        _, derived = monte_carlo_errors(counts, resamples=100, seed=14, derived=purity)
        assert set(derived) == {"purity"}
        assert 0.0 < derived["purity"] < 0.05

    def test_too_few_resamples(self):
        counts = simulate_counts(D_STATE, 100, seed=15)
        with pytest.raises(TooFewResamples):
            monte_carlo_errors(counts, resamples=1, seed=16)

    def test_record_assembly(self):
        bath = bath_from_temperature(0.34)
        truth = apply(gad_channel(bath, 0.3), D_STATE)
        rec = run_tomography(truth, shots=5000, seed=17, resamples=50)
        assert rec.shots_per_basis == 5000
        assert sum(rec.counts.x) == 5000
        assert all(s >= 0.0 for s in rec.bloch_sigma)
        assert trace_distance(rec.reconstructed, truth) < 0.1
        assert rec.derived_sigma == {}
