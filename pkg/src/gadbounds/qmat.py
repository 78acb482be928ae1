"""Small dense complex-Hermitian linear algebra.

Everything in this package acts on matrices of dimension at most 8 (qubit
states, two-qubit circuit states, Choi matrices), so the eigensolver is a
cyclic Jacobi iteration specialized to complex Hermitian input: simple,
dependency-free and exact to machine precision at these sizes.

The module provides

* :func:`herm_eigen` -- deterministic eigendecomposition,
* :class:`DensityMatrix` -- validated quantum state with a cached
  eigendecomposition,
* :func:`mat_sqrt` / :func:`mat_log` -- PSD matrix functions,
* :func:`bloch_to_rho` / :func:`rho_to_bloch` -- qubit parameterization.

Conventions: the computational basis vector ``e0`` is the *excited* level
(horizontal polarization ``|H>``), ``e1`` the ground level (``|V>``); the
Bloch z-axis points at ``|H>``; all matrices are ``numpy`` complex arrays.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import (
    NoConvergence,
    NotHermitian,
    NotPSD,
    OutsideBall,
    SingularState,
    WrongDim,
)

MAX_DIM = 8

# Tolerances (see class/function contracts below).
HERM_TOL = 1e-10          # Hermiticity precondition for the eigensolver
STATE_HERM_TOL = 1e-12    # Hermiticity invariant of DensityMatrix
TRACE_TOL = 1e-12         # unit-trace invariant of DensityMatrix
EIG_FLOOR = -1e-12        # eigenvalues below this are genuine negativity
BALL_TOL = 1e-9           # Bloch-ball membership window

_JACOBI_SWEEPS = 100
_JACOBI_OFF_TOL = 1e-14

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
IDENTITY2 = np.eye(2, dtype=complex)
for _m in (PAULI_X, PAULI_Y, PAULI_Z, IDENTITY2):
    _m.setflags(write=False)


class HermEigen(NamedTuple):
    """Eigendecomposition of a Hermitian matrix.

    ``eigenvalues`` is a real array in ascending order; ``eigenvectors``
    holds the matching orthonormal eigenvectors as columns.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


class BlochVector(NamedTuple):
    """Qubit expectation values (<sx>, <sy>, <sz>)."""

    x: float
    y: float
    z: float

    def norm(self) -> float:
        return math.sqrt(self.x ** 2 + self.y ** 2 + self.z ** 2)


def _as_square(a, what: str = "matrix") -> np.ndarray:
    arr = np.asarray(a, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise WrongDim(f"{what} must be square, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[0] > MAX_DIM:
        raise WrongDim(f"{what} dimension must be in [1, {MAX_DIM}], got {arr.shape[0]}")
    return arr


def _herm_defect(a: np.ndarray) -> float:
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def herm_eigen(a) -> HermEigen:
    """Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi.

    Parameters
    ----------
    a : array-like
        Square complex Hermitian matrix, dimension <= 8; Hermitian within
        1e-10 in max norm.

    Returns
    -------
    HermEigen
        Ascending eigenvalues and orthonormal eigenvector columns with
        ``V diag(w) V^† = a`` to better than 1e-10.  The output is
        deterministic: ties are resolved by a stable sort and each
        eigenvector is rephased so its first component of magnitude above
        1e-12 is real and positive.

    Raises
    ------
    NotHermitian
        If the symmetry check fails.
    NoConvergence
        If the off-diagonal norm is still above 1e-14 after 100 sweeps.
    """
    a = _as_square(a)
    n = a.shape[0]
    if _herm_defect(a) > HERM_TOL:
        raise NotHermitian(f"matrix deviates from Hermitian by {_herm_defect(a):.3e}")

    w = 0.5 * (a + a.conj().T)  # exact symmetrization of round-off noise
    v = np.eye(n, dtype=complex)
    if n == 1:
        return HermEigen(np.array([w[0, 0].real]), v)

    converged = False
    for _ in range(_JACOBI_SWEEPS):
        off = np.abs(w - np.diag(np.diag(w))).max()
        if off <= _JACOBI_OFF_TOL:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = w[p, q]
                r = abs(g)
                if r <= 1e-300:
                    continue
                u = g / r  # unit phase; diag(1, conj(u)) makes the pivot real
                alpha = w[p, p].real
                beta = w[q, q].real
                tau = (beta - alpha) / (2.0 * r)
                # smaller root of t^2 + 2*tau*t - 1 = 0, in cancellation-free form
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(tau * tau + 1.0))
                else:
                    t = 1.0 / (tau - math.sqrt(tau * tau + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                uc = np.conj(u)
                # W <- J^† W J and V <- V J with the plane rotation
                # J[p,p]=c, J[p,q]=s, J[q,p]=-s*conj(u), J[q,q]=c*conj(u).
                col_p = w[:, p].copy()
                col_q = w[:, q].copy()
                w[:, p] = c * col_p - s * uc * col_q
                w[:, q] = s * col_p + c * uc * col_q
                row_p = w[p, :].copy()
                row_q = w[q, :].copy()
                w[p, :] = c * row_p - s * u * row_q
                w[q, :] = s * row_p + c * u * row_q
                w[p, q] = 0.0
                w[q, p] = 0.0
                w[p, p] = w[p, p].real
                w[q, q] = w[q, q].real
                col_p = v[:, p].copy()
                col_q = v[:, q].copy()
                v[:, p] = c * col_p - s * uc * col_q
                v[:, q] = s * col_p + c * uc * col_q
    else:
        converged = np.abs(w - np.diag(np.diag(w))).max() <= _JACOBI_OFF_TOL
    if not converged:
        raise NoConvergence(f"Jacobi sweeps exhausted at dimension {n}")

    vals = np.diag(w).real.copy()
    order = np.argsort(vals, kind="stable")
    vals = vals[order]
    vecs = v[:, order]
    # deterministic phase: first significant component real-positive
    for k in range(n):
        col = vecs[:, k]
        for comp in col:
            if abs(comp) > 1e-12:
                vecs[:, k] = col * (np.conj(comp) / abs(comp))
                break
    vals.setflags(write=False)
    vecs.setflags(write=False)
    return HermEigen(vals, vecs)


class DensityMatrix:
    """Validated quantum state: Hermitian, unit trace, positive semidefinite.

    Construction checks Hermiticity (1e-12) and unit trace (1e-12), then
    eigendecomposes.  An eigenvalue below -1e-12 raises :class:`NotPSD`;
    eigenvalues in [-1e-12, 0) are round-off or tomography noise and are
    clamped to zero, after which the state is renormalized.  The
    eigendecomposition is cached on the instance (``.eigen``) so matrix
    functions downstream never re-diagonalize.

    The stored array is read-only; instances are immutable and safe to
    share across threads.
    """

    __slots__ = ("_mat", "_eigen")

    def __init__(self, mat):
        arr = _as_square(mat, "density matrix")
        defect = _herm_defect(arr)
        if defect > STATE_HERM_TOL:
            raise NotHermitian(f"density matrix deviates from Hermitian by {defect:.3e}")
        arr = 0.5 * (arr + arr.conj().T)
        tr = arr.trace().real
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"density matrix trace {tr!r} is not 1 within {TRACE_TOL}")

        eig = herm_eigen(arr)
        vals = eig.eigenvalues
        if vals[0] < EIG_FLOOR:
            raise NotPSD(f"eigenvalue {vals[0]:.3e} below floor {EIG_FLOOR}")
        if vals[0] < 0.0:
            vals = np.clip(vals, 0.0, None)
            vals = vals / vals.sum()
            vecs = eig.eigenvectors
            arr = (vecs * vals) @ vecs.conj().T
            arr = 0.5 * (arr + arr.conj().T)
            vals = vals.copy()
            vals.setflags(write=False)
            eig = HermEigen(vals, vecs)
        arr.setflags(write=False)
        self._mat = arr
        self._eigen = eig

    @property
    def mat(self) -> np.ndarray:
        """The underlying read-only complex array."""
        return self._mat

    @property
    def dim(self) -> int:
        return self._mat.shape[0]

    @property
    def eigen(self) -> HermEigen:
        """Cached eigendecomposition (ascending, clamped to >= 0)."""
        return self._eigen

    def __repr__(self) -> str:
        return f"DensityMatrix(dim={self.dim})"


def _psd_eigen(rho) -> HermEigen:
    """Eigendecomposition with the PSD clamp rule, for states or raw arrays."""
    if isinstance(rho, DensityMatrix):
        return rho.eigen
    eig = herm_eigen(rho)
    vals = eig.eigenvalues
    if vals[0] < EIG_FLOOR:
        raise NotPSD(f"eigenvalue {vals[0]:.3e} below floor {EIG_FLOOR}")
    if vals[0] < 0.0:
        vals = np.clip(vals, 0.0, None)
    return HermEigen(vals, eig.eigenvectors)


def mat_sqrt(rho) -> np.ndarray:
    """Positive-semidefinite square root.

    Accepts a :class:`DensityMatrix` (using its cached eigendecomposition)
    or any Hermitian PSD array.  Eigenvalues in the round-off window
    [-1e-12, 0) are clamped to zero before the square root; anything more
    negative raises :class:`NotPSD`.  Eigenvalues at or below 1e-15 are
    treated as exact zeros: the square root would otherwise amplify
    round-off noise of size eps to sqrt(eps), spoiling rank-deficient
    inputs such as pure states.
    """
    vals, vecs = _psd_eigen(rho)
    vals = np.where(vals <= 1e-15, 0.0, vals)
    return (vecs * np.sqrt(vals)) @ vecs.conj().T


def mat_log(rho: DensityMatrix, on_support: bool = False) -> np.ndarray:
    """Matrix natural logarithm of a state.

    For a full-rank state returns ``ln rho``.  If any eigenvalue is at or
    below 1e-15 the state is singular: with ``on_support=False`` this
    raises :class:`SingularState`; with ``on_support=True`` the logarithm
    is restricted to the support (null-space blocks are set to zero), which
    is the convention backing the ``0*ln 0 = 0`` limit used by all
    entropies in this package.
    """
    vals, vecs = _psd_eigen(rho)
    logs = np.empty_like(vals)
    for i, lam in enumerate(vals):
        if lam <= 1e-15:
            if not on_support:
                raise SingularState(
                    f"eigenvalue {lam:.3e} <= 1e-15; pass on_support=True to restrict"
                )
            logs[i] = 0.0
        else:
            logs[i] = math.log(lam)
    return (vecs * logs) @ vecs.conj().T


def bloch_to_rho(b) -> DensityMatrix:
    """Qubit state from a Bloch vector ``(x, y, z)``.

    The vector must lie in the closed unit ball up to a 1e-9 window
    (:class:`OutsideBall` beyond it); vectors marginally outside the ball
    are rescaled onto the sphere so the result is always a valid state.
    ``(0,0,1)`` is ``|H><H|``, ``(0,0,-1)`` is ``|V><V|`` and ``(1,0,0)``
    is the balanced superposition ``|D><D|``.
    """
    x, y, z = (float(c) for c in b)
    norm = math.sqrt(x * x + y * y + z * z)
    if norm > 1.0 + BALL_TOL:
        raise OutsideBall(f"Bloch vector norm {norm!r} exceeds 1 + {BALL_TOL}")
    if norm > 1.0:
        x, y, z = x / norm, y / norm, z / norm
    mat = 0.5 * np.array(
        [[1.0 + z, x - 1.0j * y], [x + 1.0j * y, 1.0 - z]], dtype=complex
    )
    return DensityMatrix(mat)


def rho_to_bloch(rho: DensityMatrix) -> BlochVector:
    """Bloch vector of a qubit state (inverse of :func:`bloch_to_rho`)."""
    if rho.dim != 2:
        raise WrongDim(f"Bloch conversion needs a qubit, got dim {rho.dim}")
    m = rho.mat
    return BlochVector(
        x=float((m[0, 1] + m[1, 0]).real),
        y=float((1.0j * (m[0, 1] - m[1, 0])).real),
        z=float((m[0, 0] - m[1, 1]).real),
    )
