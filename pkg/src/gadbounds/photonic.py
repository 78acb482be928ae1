"""Photonic-circuit realization and shot-noise tomography.

The damping channels are realized on polarization qubits: a system photon
A and an ancilla B (prepared in ``|H>``) pass half-wave plates and a
controlled-sign gate,

    ``U = (I (x) R(theta)) . CZ . (I (x) R(theta))``,

after which B is measured in the H/V basis and the outcome controls a
Pauli correction on A applied in post-processing.  The waveplate angle
sets the damping strength ``eta = sin^2(4 theta)``.  Tracing through the
algebra, the uncorrected branch operators on A are ``M_H = diag(1,
cos 4theta)`` and ``M_V = sin 4theta |V><V|``; the corrections (X on
outcome V, and additionally Z on outcome H whenever ``cos 4theta < 0``)
turn this into the amplitude damping map for every real ``theta``.  The
inverse map is the same circuit conjugated by X on the system, and the
thermal channel is the ``p : (1-p)`` statistical mixture of the two
branches.

State readout is simulated as projective measurements in the three Pauli
bases with a fixed shot budget per basis (binomial outcome splitting).
Reconstruction is linear inversion with radial projection onto the Bloch
ball, and uncertainties come from a parametric bootstrap: counts are
redrawn from the reconstructed probabilities, the full analysis is re-run
per resample, and per-quantity standard deviations are reported.  Every
random draw derives from a caller-supplied integer seed, so records are
bit-identical across runs and independent of scheduling.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional

import numpy as np

from .channels import BathParams, KrausChannel
from .errors import TooFewResamples, WrongDim, ZeroShots
from .qmat import (
    IDENTITY2,
    PAULI_X,
    PAULI_Z,
    DensityMatrix,
    bloch_to_rho,
    rho_to_bloch,
)

#: A two-qubit state (dim-4 DensityMatrix) ordered system (x) ancilla.
TwoQubitState = DensityMatrix


class Branch(enum.Enum):
    """Which damping branch the circuit realizes."""

    AD = "ad"
    IAD = "iad"


@dataclass(frozen=True)
class CircuitConfig:
    """Waveplate angle, branch selection and mixing weight.

    ``theta`` may be any real angle; the implied damping is
    ``sin^2(4 theta)``.  ``p_mix`` is the statistical weight of the AD
    branch when the two branches are combined into the thermal channel.
    """

    theta: float
    branch: Branch = Branch.AD
    p_mix: float = 1.0

    def __post_init__(self):
        if not (0.0 <= self.p_mix <= 1.0):
            raise ValueError(f"p_mix {self.p_mix!r} outside [0, 1]")

    @property
    def eta(self) -> float:
        return math.sin(4.0 * self.theta) ** 2


def hwp_jones(theta: float) -> np.ndarray:
    """Jones matrix of a half-wave plate at angle ``theta``:
    ``[[cos 2t, sin 2t], [sin 2t, -cos 2t]]`` (real, unitary, self-inverse).
    """
    c, s = math.cos(2.0 * theta), math.sin(2.0 * theta)
    return np.array([[c, s], [s, -c]], dtype=complex)


def cz_gate() -> np.ndarray:
    """Controlled-sign gate ``diag(1, 1, 1, -1)`` in the ordered basis
    ``{HH, HV, VH, VV}``: a pi-phase on the doubly-vertical component."""
    return np.diag([1.0, 1.0, 1.0, -1.0]).astype(complex)


def _circuit_unitary(theta: float) -> np.ndarray:
    r = hwp_jones(theta)
    return np.kron(IDENTITY2, r) @ cz_gate() @ np.kron(IDENTITY2, r)


def simulate_branch(rho_a: DensityMatrix, cfg: CircuitConfig) -> KrausChannel:
    """Run one branch of the circuit and return the induced channel on A.

    The system state ``rho_a`` is propagated through the two-qubit
    pipeline (ancilla in ``|H>``, waveplate, CZ, waveplate, ancilla H/V
    measurement, outcome-conditioned Pauli correction) as a consistency
    check; the returned channel's Kraus operators are extracted from the
    same unitary and reproduce the amplitude damping map (or its X-mirror
    for ``Branch.IAD``) with ``eta = sin^2(4 theta)``.
    """
    if rho_a.dim != 2:
        raise WrongDim(f"system must be a qubit, got dim {rho_a.dim}")
    u = _circuit_unitary(cfg.theta)
    # M_out[a', a] = <a', out| U |a, H>: slice the unitary as a (2,2,2,2)
    # tensor [a', b', a, b] with the ancilla fixed to |H> at the input.
    ut = u.reshape(2, 2, 2, 2)
    # corrections: X on outcome V always; Z on outcome H when cos(4 theta)
    # is negative, restoring the printed Kraus form for any real angle.
    corrections = (
        PAULI_Z if math.cos(4.0 * cfg.theta) < 0.0 else IDENTITY2,
        PAULI_X,
    )
    kraus = [corr @ ut[:, out, :, 0] for out, corr in enumerate(corrections)]
    mirror = cfg.branch is Branch.IAD
    if mirror:
        kraus = [PAULI_X @ k @ PAULI_X for k in kraus]
    channel = KrausChannel(kraus)

    # pipeline consistency: evolving rho_A (x) |H><H| through the circuit,
    # measuring the ancilla and correcting each branch must agree with the
    # extracted Kraus action on rho_A (the IAD branch conjugates the
    # system by X going in and coming out).
    sys_in = PAULI_X @ rho_a.mat @ PAULI_X if mirror else rho_a.mat
    evolved = u @ np.kron(sys_in, np.diag([1.0, 0.0]).astype(complex)) @ u.conj().T
    et = evolved.reshape(2, 2, 2, 2)
    pipeline = np.zeros((2, 2), dtype=complex)
    for out, corr in enumerate(corrections):
        block = corr @ et[:, out, :, out] @ corr.conj().T
        pipeline += PAULI_X @ block @ PAULI_X if mirror else block
    direct = sum(k @ rho_a.mat @ k.conj().T for k in channel.kraus_ops)
    if np.max(np.abs(pipeline - direct)) > 1e-12:
        raise ValueError("circuit pipeline disagrees with extracted Kraus operators")
    return channel


def gad_from_circuit(theta: float, bath: BathParams) -> KrausChannel:
    """Thermal channel built from the circuit: the ``p : (1-p)`` mixture of
    the AD and IAD branches, equal as a map to the analytic channel with
    ``eta = sin^2(4 theta)``."""
    probe = bloch_to_rho((0.0, 0.0, 1.0))
    ad_ops = simulate_branch(probe, CircuitConfig(theta=theta, branch=Branch.AD)).kraus_ops
    iad_ops = simulate_branch(probe, CircuitConfig(theta=theta, branch=Branch.IAD)).kraus_ops
    sp = math.sqrt(bath.p_excited)
    s1p = math.sqrt(1.0 - bath.p_excited)
    return KrausChannel(
        [sp * op for op in ad_ops] + [s1p * op for op in iad_ops]
    )


def damping_from_process(channel: KrausChannel) -> float:
    """Recover ``eta`` from process data via the coherence decay
    ``x' = sqrt(1-eta) x`` on the balanced superposition input."""
    d_in = bloch_to_rho((1.0, 0.0, 0.0)).mat
    out = sum(op @ d_in @ op.conj().T for op in channel.kraus_ops)
    x_out = float((out[0, 1] + out[1, 0]).real)
    return 1.0 - x_out ** 2


# --- tomography ---------------------------------------------------------------

_BASES = ("x", "y", "z")


@dataclass(frozen=True)
class CountTable:
    """Measured (+1, -1) outcome counts per Pauli basis."""

    shots_per_basis: int
    x: tuple[int, int]
    y: tuple[int, int]
    z: tuple[int, int]

    def __post_init__(self):
        if self.shots_per_basis < 1:
            raise ZeroShots(f"shots_per_basis {self.shots_per_basis!r} must be >= 1")
        for name in _BASES:
            plus, minus = getattr(self, name)
            if plus < 0 or minus < 0 or plus + minus != self.shots_per_basis:
                raise ValueError(f"{name}-basis counts {(plus, minus)} do not sum to budget")


@dataclass(frozen=True)
class TomographyRecord:
    """Counts, the state reconstructed from them, and bootstrap errors."""

    counts: CountTable
    reconstructed: DensityMatrix
    bloch_sigma: tuple[float, float, float]
    derived_sigma: dict = field(default_factory=dict)

    @property
    def shots_per_basis(self) -> int:
        return self.counts.shots_per_basis


def _draw_counts(rng, shots: int, bloch) -> CountTable:
    cols = []
    for comp in bloch:
        q = min(1.0, max(0.0, 0.5 * (1.0 + comp)))
        plus = int(rng.binomial(shots, q))
        cols.append((plus, shots - plus))
    return CountTable(shots_per_basis=shots, x=cols[0], y=cols[1], z=cols[2])


def simulate_counts(rho: DensityMatrix, shots: int, seed: int) -> CountTable:
    """Simulate tomography counts for a qubit state.

    Each Pauli basis receives the full ``shots`` budget; the +1 outcome
    count is binomial with success probability ``(1 + <sigma_b>)/2``.
    Deterministic for a fixed seed.
    """
    if rho.dim != 2:
        raise WrongDim(f"tomography needs a qubit, got dim {rho.dim}")
    shots = int(shots)
    if shots < 1:
        raise ZeroShots(f"shots {shots!r} must be >= 1")
    rng = np.random.default_rng(seed)
    return _draw_counts(rng, shots, rho_to_bloch(rho))


def reconstruct_state(counts: CountTable) -> DensityMatrix:
    """Linear-inversion estimate with radial projection onto the Bloch ball."""
    shots = counts.shots_per_basis
    r = np.array(
        [(plus - minus) / shots for plus, minus in (counts.x, counts.y, counts.z)]
    )
    norm = float(np.linalg.norm(r))
    if norm > 1.0:
        r = r / norm
    return bloch_to_rho(r)


def monte_carlo_errors(
    counts: CountTable,
    resamples: int,
    seed: int,
    derived: Optional[Callable[[DensityMatrix], Mapping[str, float]]] = None,
) -> tuple[tuple[float, float, float], dict]:
    """Parametric-bootstrap standard deviations.

    ``resamples`` fresh count tables are drawn from the probabilities of
    the state reconstructed from ``counts``; each is reconstructed and,
    when ``derived`` is given, pushed through the caller's downstream
    functionals (entropy production, bounds, ...).  Returns the Bloch
    component sigmas and a dict of sigmas for each derived quantity.
    Sample standard deviation uses ddof=1; each resample draws from its
    own stream seeded by ``(seed, index)``, so results are reproducible
    regardless of evaluation order.
    """
    resamples = int(resamples)
    if resamples < 2:
        raise TooFewResamples(f"resamples {resamples!r} must be >= 2")
    base = reconstruct_state(counts)
    base_bloch = rho_to_bloch(base)
    shots = counts.shots_per_basis
    blochs = np.empty((resamples, 3))
    derived_rows: list[dict] = []
    for i in range(resamples):
        rng = np.random.default_rng([seed, i])
        table = _draw_counts(rng, shots, base_bloch)
        rho_i = reconstruct_state(table)
        blochs[i] = rho_to_bloch(rho_i)
        if derived is not None:
            derived_rows.append(dict(derived(rho_i)))
    sigma = blochs.std(axis=0, ddof=1)
    derived_sigma: dict = {}
    if derived is not None:
        for key in derived_rows[0]:
            derived_sigma[key] = float(
                np.std([row[key] for row in derived_rows], ddof=1)
            )
    return (float(sigma[0]), float(sigma[1]), float(sigma[2])), derived_sigma


def run_tomography(
    rho: DensityMatrix,
    shots: int,
    seed: int,
    resamples: int = 100,
    derived: Optional[Callable[[DensityMatrix], Mapping[str, float]]] = None,
) -> TomographyRecord:
    """Simulate counts, reconstruct, and attach bootstrap uncertainties."""
    counts = simulate_counts(rho, shots, seed)
    bloch_sigma, derived_sigma = monte_carlo_errors(counts, resamples, seed, derived)
    return TomographyRecord(
        counts=counts,
        reconstructed=reconstruct_state(counts),
        bloch_sigma=bloch_sigma,
        derived_sigma=derived_sigma,
    )
