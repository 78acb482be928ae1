"""Entropy functionals and irreversible entropy production.

Two equivalent expressions for the irreversible part of the entropy change
of a system relaxing toward thermal equilibrium:

* thermodynamic form: ``dS_irr = [S(rho_t) - S(rho_0)] - dQ/T`` with the
  heat ``dQ = Tr[H rho_t] - Tr[H rho_0]``;
* relative-entropy form: ``dS_irr = S(rho_0||rho_eq) - S(rho_t||rho_eq)``.

They agree whenever ``rho_eq`` is the Gibbs state of ``H`` at temperature
``T`` (the identity ``ln rho_eq = -H/T - ln Z`` makes the forms algebraically
equal), which the test suite verifies to 1e-10 over random inputs.

All entropies are in nats, with the ``0 * ln 0 = 0`` convention.  Relative
entropy returns ``math.inf`` when the first state's support leaks outside
the second's (support decided at eigenvalue threshold 1e-12); infinity is a
legitimate value during asymptotic sweeps, not an error.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import (
    DimMismatch,
    NonPositiveTemperature,
    NotHermitian,
    SingularEquilibrium,
)
from .qmat import DensityMatrix, _herm_defect

SUPPORT_TOL = 1e-12


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """``-Tr(rho ln rho)`` in nats; lies in ``[0, ln dim]``."""
    s = 0.0
    for lam in rho.eigen.eigenvalues:
        if lam > 0.0:
            s -= lam * math.log(lam)
    return max(s, 0.0)


def _tr_rho_log_rho(rho: DensityMatrix) -> float:
    return sum(lam * math.log(lam) for lam in rho.eigen.eigenvalues if lam > 0.0)


def relative_entropy(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """``S(rho||sigma) = Tr(rho ln rho) - Tr(rho ln sigma)``.

    Returns ``math.inf`` iff ``rho`` has weight above 1e-12 in the null
    space of ``sigma``.  Finite values are clamped at zero (the functional
    is non-negative; tiny negatives are round-off).
    """
    if rho.dim != sigma.dim:
        raise DimMismatch(f"state dims {rho.dim} vs {sigma.dim}")
    svals, svecs = sigma.eigen
    weights = np.real(np.einsum("ij,jk,ki->i", svecs.conj().T, rho.mat, svecs))
    cross = 0.0
    for lam, w in zip(svals, weights):
        if lam <= SUPPORT_TOL:
            if w > SUPPORT_TOL:
                return math.inf
        else:
            cross += w * math.log(lam)
    return max(_tr_rho_log_rho(rho) - cross, 0.0)


def heat(rho0: DensityMatrix, rho_t: DensityMatrix, h) -> float:
    """Energy absorbed by the system: ``Tr[H rho_t] - Tr[H rho_0]``."""
    h = np.asarray(h, dtype=complex)
    if _herm_defect(h) > 1e-10:
        raise NotHermitian("Hamiltonian must be Hermitian")
    if rho0.dim != rho_t.dim or h.shape != (rho0.dim, rho0.dim):
        raise DimMismatch(
            f"dims: rho0 {rho0.dim}, rho_t {rho_t.dim}, H {h.shape}"
        )
    return float(np.trace(h @ rho_t.mat).real - np.trace(h @ rho0.mat).real)


def delta_s_irr_thermo(
    rho0: DensityMatrix, rho_t: DensityMatrix, h, temperature: float
) -> float:
    """Irreversible entropy production, thermodynamic form.

    ``[S(rho_t) - S(rho_0)] - dQ/T``; non-negative (up to -1e-9 round-off)
    whenever ``rho_t`` lies downstream of ``rho0`` on a thermalizing
    trajectory with Gibbs fixed point of ``h`` at this temperature.
    """
    if not (temperature > 0.0):
        raise NonPositiveTemperature(f"temperature {temperature!r} must be > 0")
    ds = von_neumann_entropy(rho_t) - von_neumann_entropy(rho0)
    return ds - heat(rho0, rho_t, h) / temperature


def delta_s_irr_relent(
    rho0: DensityMatrix, rho_t: DensityMatrix, rho_eq: DensityMatrix
) -> float:
    """Irreversible entropy production, relative-entropy form.

    ``S(rho0||rho_eq) - S(rho_t||rho_eq)``; as the trajectory completes
    (``rho_t -> rho_eq``) this tends to ``S(rho0||rho_eq)``.
    """
    if rho_eq.eigen.eigenvalues[0] <= SUPPORT_TOL:
        raise SingularEquilibrium("equilibrium state must be full rank")
    return relative_entropy(rho0, rho_eq) - relative_entropy(rho_t, rho_eq)
