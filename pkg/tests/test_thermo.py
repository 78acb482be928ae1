import math

import numpy as np
import pytest

from qhelpers import random_density, random_pure
from gadbounds.channels import (
    apply,
    bath_from_temperature,
    gad_channel,
    gibbs_state,
    qubit_hamiltonian,
)
from gadbounds.errors import (
    DimMismatch,
    NonPositiveTemperature,
    NotHermitian,
    SingularEquilibrium,
)
from gadbounds.qmat import DensityMatrix, bloch_to_rho
from gadbounds.thermo import (
    delta_s_irr_relent,
    delta_s_irr_thermo,
    heat,
    relative_entropy,
    von_neumann_entropy,
)

BATH = bath_from_temperature(0.34)
EQ = gibbs_state(BATH)
H_STATE = bloch_to_rho((0.0, 0.0, 1.0))
V_STATE = bloch_to_rho((0.0, 0.0, -1.0))
D_STATE = bloch_to_rho((1.0, 0.0, 0.0))


class TestVonNeumann:
    def test_pure_states_have_zero_entropy(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            assert von_neumann_entropy(random_pure(rng)) < 1e-12

    def test_maximally_mixed(self):
        s = von_neumann_entropy(DensityMatrix(np.eye(2) / 2))
        assert abs(s - math.log(2.0)) < 1e-14

    def test_equilibrium_value(self):
        assert abs(von_neumann_entropy(EQ) - 0.19897195776640497) < 1e-12

    def test_range(self):
        rng = np.random.default_rng(1)
        for _ in range(100):
            dim = int(rng.integers(2, 5))
            s = von_neumann_entropy(random_density(rng, dim))
            assert 0.0 <= s <= math.log(dim) + 1e-12


class TestRelativeEntropy:
    def test_self_is_zero(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            rho = random_density(rng)
            assert relative_entropy(rho, rho) < 1e-12

    def test_pure_vs_maximally_mixed(self):
        val = relative_entropy(D_STATE, DensityMatrix(np.eye(2) / 2))
        assert abs(val - math.log(2.0)) < 1e-12

    def test_anchor_values(self):
        assert abs(relative_entropy(H_STATE, EQ) - 2.992633143446382) < 1e-12
        assert abs(relative_entropy(D_STATE, EQ) - 1.5220449081522645) < 1e-12
        assert abs(relative_entropy(V_STATE, EQ) - 0.05145667285814686) < 1e-12

    def test_infinite_when_support_leaks(self):
        assert relative_entropy(H_STATE, V_STATE) == math.inf
        mixed = DensityMatrix(np.diag([0.4, 0.6]))
        assert relative_entropy(mixed, H_STATE) == math.inf
        # reverse direction is finite
        assert relative_entropy(H_STATE, mixed) < math.inf

    def test_non_negative(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            val = relative_entropy(random_density(rng), random_density(rng))
            assert val >= 0.0

    def test_zero_iff_equal(self):
        rng = np.random.default_rng(4)
        rho = random_density(rng)
        sigma = random_density(rng)
        assert relative_entropy(rho, sigma) > 1e-6
        assert relative_entropy(rho, DensityMatrix(rho.mat.copy())) < 1e-12

    def test_dim_mismatch(self):
        with pytest.raises(DimMismatch):
            relative_entropy(H_STATE, DensityMatrix(np.eye(4) / 4))


class TestHeat:
    def test_no_change_no_heat(self):
        assert heat(D_STATE, D_STATE, qubit_hamiltonian()) == 0.0

    def test_excited_to_equilibrium(self):
        dq = heat(H_STATE, EQ, qubit_hamiltonian())
        assert abs(dq - (-0.9498448031311922)) < 1e-12

    def test_ground_to_equilibrium(self):
        dq = heat(V_STATE, EQ, qubit_hamiltonian())
        assert abs(dq - 0.05015519686880776) < 1e-12

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian):
            heat(H_STATE, EQ, np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_dim_mismatch(self):
        with pytest.raises(DimMismatch):
            heat(H_STATE, EQ, np.eye(4))


class TestEntropyProduction:
    def test_stationary_trajectory_is_zero(self):
        h = qubit_hamiltonian()
        assert abs(delta_s_irr_thermo(EQ, EQ, h, 0.34)) < 1e-14
        assert abs(delta_s_irr_relent(EQ, EQ, EQ)) < 1e-14

    def test_no_evolution_is_zero(self):
        rng = np.random.default_rng(5)
        rho = random_density(rng)
        assert abs(delta_s_irr_thermo(rho, rho, qubit_hamiltonian(), 1.0)) < 1e-14
        assert abs(delta_s_irr_relent(rho, rho, EQ)) < 1e-14

    def test_forms_agree_on_anchor(self):
        rho_t = apply(gad_channel(BATH, 0.5), D_STATE)
        a = delta_s_irr_thermo(D_STATE, rho_t, qubit_hamiltonian(), 0.34)
        b = delta_s_irr_relent(D_STATE, rho_t, EQ)
        assert abs(a - b) < 1e-10

    def test_forms_agree_randomized(self):
        rng = np.random.default_rng(6)
        h = qubit_hamiltonian()
        worst = 0.0
        for _ in range(300):
            t = rng.uniform(0.1, 5.0)
            bath = bath_from_temperature(t)
            rho0 = random_density(rng)
            rho_t = apply(gad_channel(bath, rng.uniform(0.0, 1.0)), rho0)
            a = delta_s_irr_thermo(rho0, rho_t, h, t)
            b = delta_s_irr_relent(rho0, rho_t, gibbs_state(bath))
            worst = max(worst, abs(a - b))
        assert worst < 1e-10

    def test_clausius_along_trajectories(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            bath = bath_from_temperature(rng.uniform(0.1, 5.0))
            rho0 = random_density(rng)
            for eta in np.linspace(0.0, 1.0, 11):
                rho_t = apply(gad_channel(bath, eta), rho0)
                val = delta_s_irr_relent(rho0, rho_t, gibbs_state(bath))
                assert val >= -1e-9

    def test_monotone_under_thermalization(self):
        # data processing: S(rho_t||eq) non-increasing along the trajectory
        for rho0 in (D_STATE, H_STATE, random_density(np.random.default_rng(8))):
            values = [
                relative_entropy(apply(gad_channel(BATH, eta), rho0), EQ)
                for eta in np.linspace(0.0, 1.0, 100)
            ]
            diffs = np.diff(values)
            assert np.all(diffs <= 1e-10)

    def test_full_thermalization_reaches_relent(self):
        rho_t = apply(gad_channel(BATH, 1.0), V_STATE)
        val = delta_s_irr_relent(V_STATE, rho_t, EQ)
        assert abs(val - 0.05145667285814686) < 1e-10

    def test_singular_equilibrium_rejected(self):
        with pytest.raises(SingularEquilibrium):
            delta_s_irr_relent(D_STATE, D_STATE, H_STATE)

    def test_non_positive_temperature_rejected(self):
        with pytest.raises(NonPositiveTemperature):
            delta_s_irr_thermo(D_STATE, EQ, qubit_hamiltonian(), 0.0)
