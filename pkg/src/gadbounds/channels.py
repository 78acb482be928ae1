"""Kraus channels for qubit thermalization.

The central object is the generalized amplitude damping (GAD) family: a
qubit coupled to a bosonic bath at temperature ``T`` relaxes toward the
Gibbs state ``rho_eq = diag(p, 1-p)`` (excited population ``p``) with a
damping coefficient ``eta`` that grows from 0 to 1 along the trajectory.
GAD decomposes as the ``p : (1-p)`` mixture of an amplitude damping map
(AD, decay toward the excited level ``e0``) and its Pauli-X mirror (IAD,
decay toward ``e1``).

Units: ``k_B = hbar = omega = 1``; the qubit Hamiltonian is
``H = |0><0|`` (excited energy 1, ground energy 0).

Bath parameterization::

    nbar = (coth(1/(2T)) - 1)/2 = 1/(e^{1/T} - 1)
    p    = nbar/(2 nbar + 1)    = 1/(e^{1/T} + 1)
    rate = 2 nbar + 1
    eta(t) = 1 - exp(-rate * t)

The first forms of ``p`` and ``rate`` keep the equilibrium state exactly
Gibbsian and the decay rate positive and increasing with temperature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import (
    DimMismatch,
    EtaOutOfRange,
    LambdaOutOfRange,
    NonPositiveTemperature,
)
from .qmat import DensityMatrix, _as_square

COMPLETENESS_TOL = 1e-10


@dataclass(frozen=True)
class BathParams:
    """Thermal-bath parameters for the GAD family.

    All four numbers are redundant encodings of the temperature; the
    constructor-level consistency checks catch hand-built instances that
    drifted from the defining relations.
    """

    temperature: float
    nbar: float
    p_excited: float
    rate: float

    def __post_init__(self):
        if not (self.temperature > 0.0) or not math.isfinite(self.temperature):
            raise NonPositiveTemperature(f"temperature {self.temperature!r} must be > 0")
        nbar = 1.0 / math.expm1(1.0 / self.temperature)
        if abs(self.nbar - nbar) > 1e-12:
            raise ValueError(f"nbar {self.nbar!r} inconsistent with T={self.temperature!r}")
        if abs(self.p_excited - self.nbar / (2.0 * self.nbar + 1.0)) > 1e-12:
            raise ValueError(f"p_excited {self.p_excited!r} inconsistent with nbar")
        if abs(self.rate - (2.0 * self.nbar + 1.0)) > 1e-12:
            raise ValueError(f"rate {self.rate!r} inconsistent with nbar")


def bath_from_temperature(temperature: float) -> BathParams:
    """Build :class:`BathParams` from a strictly positive temperature."""
    t = float(temperature)
    if not (t > 0.0) or not math.isfinite(t):
        raise NonPositiveTemperature(f"temperature {temperature!r} must be > 0")
    nbar = 1.0 / math.expm1(1.0 / t)
    p = 1.0 / (math.exp(1.0 / t) + 1.0)
    return BathParams(temperature=t, nbar=nbar, p_excited=p, rate=2.0 * nbar + 1.0)


@dataclass(frozen=True)
class DampingSchedule:
    """A point on the thermalization trajectory: damping ``eta`` at ``time``.

    ``eta = 1`` encodes the infinite-time (fully thermalized) point, with
    ``time = inf``.
    """

    eta: float
    time: float

    def __post_init__(self):
        if not (0.0 <= self.eta <= 1.0):
            raise EtaOutOfRange(f"eta {self.eta!r} outside [0, 1]")
        if self.time < 0.0 or math.isnan(self.time):
            raise ValueError(f"time {self.time!r} must be >= 0")

    @classmethod
    def from_time(cls, bath: BathParams, time: float) -> "DampingSchedule":
        if time < 0.0 or math.isnan(time):
            raise ValueError(f"time {time!r} must be >= 0")
        return cls(eta=-math.expm1(-bath.rate * time), time=float(time))

    @classmethod
    def from_eta(cls, bath: BathParams, eta: float) -> "DampingSchedule":
        if not (0.0 <= eta <= 1.0):
            raise EtaOutOfRange(f"eta {eta!r} outside [0, 1]")
        if eta == 1.0:
            return cls(eta=1.0, time=math.inf)
        return cls(eta=float(eta), time=-math.log1p(-eta) / bath.rate)


class KrausChannel:
    """A CPTP map given by an ordered list of Kraus operators.

    The completeness relation ``sum_i E_i^† E_i = I`` is verified at
    construction (max-norm residual <= 1e-10); operators are stored
    read-only, so channels are immutable values.
    """

    __slots__ = ("_dim", "_ops")

    def __init__(self, kraus_ops: Sequence):
        ops = [np.array(op, dtype=complex) for op in kraus_ops]
        if not ops:
            raise ValueError("a channel needs at least one Kraus operator")
        dim = ops[0].shape[0] if ops[0].ndim == 2 else 0
        for op in ops:
            _as_square(op, "Kraus operator")
            if op.shape != (dim, dim):
                raise DimMismatch("Kraus operators must share one dimension")
        total = sum(op.conj().T @ op for op in ops)
        defect = float(np.max(np.abs(total - np.eye(dim))))
        if defect > COMPLETENESS_TOL:
            raise ValueError(f"completeness residual {defect:.3e} exceeds {COMPLETENESS_TOL}")
        for op in ops:
            op.setflags(write=False)
        self._dim = dim
        self._ops = tuple(ops)

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def kraus_ops(self) -> tuple:
        return self._ops

    def __repr__(self) -> str:
        return f"KrausChannel(dim={self._dim}, n_ops={len(self._ops)})"


def qubit_hamiltonian() -> np.ndarray:
    """The system Hamiltonian ``|0><0|``: excited energy 1, ground 0."""
    h = np.diag([1.0, 0.0]).astype(complex)
    h.setflags(write=False)
    return h


def gibbs_state(bath: BathParams) -> DensityMatrix:
    """Thermal equilibrium state ``diag(p, 1-p)`` of the unit-gap qubit."""
    return DensityMatrix(np.diag([bath.p_excited, 1.0 - bath.p_excited]))


def _check_eta(eta: float) -> float:
    eta = float(eta)
    if not (0.0 <= eta <= 1.0):
        raise EtaOutOfRange(f"eta {eta!r} outside [0, 1]")
    return eta


def gad_channel(bath: BathParams, eta: float) -> KrausChannel:
    """Generalized amplitude damping with excited population ``p`` and
    damping ``eta``.

    Kraus operators::

        E1 = sqrt(p)   * (|0><0| + sqrt(1-eta)|1><1|)
        E2 = sqrt(p)   * sqrt(eta) |0><1|
        E3 = sqrt(1-p) * (sqrt(1-eta)|0><0| + |1><1|)
        E4 = sqrt(1-p) * sqrt(eta) |1><0|

    The unique fixed point is ``gibbs_state(bath)``; on the Bloch ball the
    action is ``x' = sqrt(1-eta) x``, ``y' = sqrt(1-eta) y``,
    ``z' = (1-eta) z + eta (2p-1)``.
    """
    eta = _check_eta(eta)
    p = bath.p_excited
    sp, s1p = math.sqrt(p), math.sqrt(1.0 - p)
    se, s1e = math.sqrt(eta), math.sqrt(1.0 - eta)
    return KrausChannel([
        sp * np.array([[1.0, 0.0], [0.0, s1e]]),
        sp * np.array([[0.0, se], [0.0, 0.0]]),
        s1p * np.array([[s1e, 0.0], [0.0, 1.0]]),
        s1p * np.array([[0.0, 0.0], [se, 0.0]]),
    ])


def ad_channel(eta: float) -> KrausChannel:
    """Amplitude damping toward the excited level ``e0``."""
    eta = _check_eta(eta)
    se, s1e = math.sqrt(eta), math.sqrt(1.0 - eta)
    return KrausChannel([
        np.array([[1.0, 0.0], [0.0, s1e]]),
        np.array([[0.0, se], [0.0, 0.0]]),
    ])


def iad_channel(eta: float) -> KrausChannel:
    """Inverse amplitude damping toward ``e1``: the AD map conjugated by
    Pauli-X on input and output."""
    eta = _check_eta(eta)
    se, s1e = math.sqrt(eta), math.sqrt(1.0 - eta)
    return KrausChannel([
        np.array([[s1e, 0.0], [0.0, 1.0]]),
        np.array([[0.0, 0.0], [se, 0.0]]),
    ])


def apply(ch: KrausChannel, rho: DensityMatrix) -> DensityMatrix:
    """Apply a channel to a state: ``sum_i E_i rho E_i^†``."""
    if ch.dim != rho.dim:
        raise DimMismatch(f"channel dim {ch.dim} vs state dim {rho.dim}")
    out = np.zeros((ch.dim, ch.dim), dtype=complex)
    m = rho.mat
    for op in ch.kraus_ops:
        out += op @ m @ op.conj().T
    return DensityMatrix(out)


def compose(a: KrausChannel, b: KrausChannel) -> KrausChannel:
    """Pipeline composition: apply ``a`` first, then ``b``.

    The Kraus set of the result is ``{B_j A_i}``, so
    ``apply(compose(a, b), rho) == apply(b, apply(a, rho))``.
    """
    if a.dim != b.dim:
        raise DimMismatch(f"channel dims {a.dim} vs {b.dim}")
    return KrausChannel([bj @ ai for bj in b.kraus_ops for ai in a.kraus_ops])


def identity_channel(dim: int = 2) -> KrausChannel:
    return KrausChannel([np.eye(dim, dtype=complex)])


def choi(ch: KrausChannel) -> np.ndarray:
    """Choi matrix ``sum_ij |i><j| (x) ch(|i><j|)``; trace equals ``dim``.

    Two channels are equal as maps exactly when their Choi matrices are
    equal, which :func:`choi_distance` decides in max norm.
    """
    d = ch.dim
    c = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            unit = np.zeros((d, d), dtype=complex)
            unit[i, j] = 1.0
            block = sum(op @ unit @ op.conj().T for op in ch.kraus_ops)
            c[i * d:(i + 1) * d, j * d:(j + 1) * d] = block
    return c


def choi_distance(a: KrausChannel, b: KrausChannel) -> float:
    """Max-norm distance between Choi matrices (0 iff equal as maps)."""
    if a.dim != b.dim:
        raise DimMismatch(f"channel dims {a.dim} vs {b.dim}")
    return float(np.max(np.abs(choi(a) - choi(b))))


def mixing_map(rho0: DensityMatrix, rho_eq: DensityMatrix, lam: float) -> DensityMatrix:
    """Convex interpolation ``(1-lam) rho0 + lam rho_eq``.

    For diagonal ``rho0`` this reproduces the GAD trajectory exactly with
    ``lam = eta``; it is the analytically tractable family on which the
    triangle inequality has a convexity proof.
    """
    lam = float(lam)
    if not (0.0 <= lam <= 1.0):
        raise LambdaOutOfRange(f"lambda {lam!r} outside [0, 1]")
    if rho0.dim != rho_eq.dim:
        raise DimMismatch(f"state dims {rho0.dim} vs {rho_eq.dim}")
    return DensityMatrix((1.0 - lam) * rho0.mat + lam * rho_eq.mat)


def gad_family(bath: BathParams) -> Callable[[float], KrausChannel]:
    """Time-parameterized GAD family ``t -> gad_channel(bath, eta(t))``.

    ``t = inf`` is supported and maps to ``eta = 1`` exactly.
    """

    def family(time: float) -> KrausChannel:
        return gad_channel(bath, -math.expm1(-bath.rate * time))

    return family
