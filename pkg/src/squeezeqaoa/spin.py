"""Exact dynamics in the permutation-symmetric subspace of n qubits.

The symmetric subspace is a single spin of length ``l = n/2``.  States are
stored in the Dicke basis: index ``m`` (0..n) counts qubits in ``|0>`` so
that ``m = <L_z> + n/2``.  With this choice the raising operator ``L_+``
has real positive matrix elements ``sqrt((n - m)(m + 1))`` between
``m`` and ``m + 1`` and agrees with ``sum_i |0><1|_i`` acting on qubits.

Cost Hamiltonian ``H_C = L_z^2 - n^2/4`` (minus the cut size on the
complete unweighted graph), mixer ``H_M = -2 L_x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.stats import binom

from ._config import MAX_SYMMETRIC_N, TOL

__all__ = [
    "SymmetricState",
    "CollectiveMoments",
    "coherent_plus_state",
    "dicke_state",
    "maxcut_target_state",
    "apply_cost_phase",
    "apply_mixer_rotation",
    "pm_distribution",
    "collective_moments",
    "energy_expectation",
    "state_overlap",
    "cost_spectrum",
    "spin_matrices",
    "phase_aligned",
]


def _check_n(n: int, minimum: int = 1) -> int:
    if int(n) != n or n < minimum:
        raise ValueError(f"qubit count must be an integer >= {minimum}, got {n!r}")
    if n > MAX_SYMMETRIC_N:
        raise ValueError(f"n={n} exceeds the symmetric-subspace cap {MAX_SYMMETRIC_N}")
    return int(n)


@dataclass(frozen=True, eq=False)
class SymmetricState:
    """Pure state of n qubits restricted to the symmetric subspace."""

    n: int
    amps: np.ndarray

    def __post_init__(self):
        n = _check_n(self.n)
        amps = np.array(self.amps, dtype=complex).reshape(-1)
        if amps.shape != (n + 1,):
            raise ValueError(f"expected {n + 1} amplitudes for n={n}, got {amps.shape[0]}")
        norm = float(np.vdot(amps, amps).real)
        if abs(norm - 1.0) > TOL.norm:
            raise ValueError(f"state is not normalised (norm^2 = {norm:.12g})")
        amps.flags.writeable = False
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "amps", amps)

    @property
    def spin(self) -> float:
        return self.n / 2

    def __repr__(self):
        return f"SymmetricState(n={self.n}, amps={np.array2string(self.amps, precision=5)})"


@dataclass(frozen=True)
class CollectiveMoments:
    mean_x: float
    mean_y: float
    mean_z: float
    second_x: float
    second_y: float
    second_z: float

    @property
    def var_x(self) -> float:
        return self.second_x - self.mean_x ** 2

    @property
    def var_y(self) -> float:
        return self.second_y - self.mean_y ** 2

    @property
    def var_z(self) -> float:
        return self.second_z - self.mean_z ** 2


# -- cached per-n structure -------------------------------------------------

@lru_cache(maxsize=None)
def _ladder(n: int) -> np.ndarray:
    """``<m+1|L_+|m>`` for m = 0..n-1."""
    m = np.arange(n, dtype=float)
    out = np.sqrt((n - m) * (m + 1))
    out.flags.writeable = False
    return out


@lru_cache(maxsize=None)
def _mz(n: int) -> np.ndarray:
    out = np.arange(n + 1) - n / 2
    out.flags.writeable = False
    return out


@lru_cache(maxsize=None)
def cost_spectrum(n: int) -> np.ndarray:
    """Diagonal of ``H_C`` in the Dicke basis, equal to ``-m (n - m)``."""
    m = np.arange(n + 1, dtype=float)
    out = -m * (n - m)
    out.flags.writeable = False
    return out


@lru_cache(maxsize=None)
def _lx_eigh(n: int) -> tuple[np.ndarray, np.ndarray]:
    # L_x is real symmetric tridiagonal with zero diagonal
    w, v = eigh_tridiagonal(np.zeros(n + 1), _ladder(n) / 2)
    w.flags.writeable = False
    v.flags.writeable = False
    return w, v


def spin_matrices(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Dense ``(L_x, L_y, L_z)`` in the Dicke basis (fresh arrays)."""
    n = _check_n(n)
    lp = np.diag(_ladder(n), -1)
    lx = (lp + lp.T) / 2
    ly = (lp - lp.T) / 2j
    return lx, ly, np.diag(_mz(n)).astype(float)


# -- states -----------------------------------------------------------------

def coherent_plus_state(n: int) -> SymmetricState:
    """``|+>^{(x)n}``, the ground state of the mixer."""
    n = _check_n(n)
    amps = np.sqrt(binom.pmf(np.arange(n + 1), n, 0.5))
    return SymmetricState(n, amps / np.linalg.norm(amps))


def dicke_state(n: int, k: int) -> SymmetricState:
    """Dicke state with ``k`` qubits in ``|0>``."""
    n = _check_n(n)
    if int(k) != k or not 0 <= k <= n:
        raise ValueError(f"excitation count must lie in [0, {n}], got {k!r}")
    amps = np.zeros(n + 1, dtype=complex)
    amps[int(k)] = 1.0
    return SymmetricState(n, amps)


def maxcut_target_state(n: int) -> SymmetricState:
    """Uniform superposition of all maximum cuts of the complete graph.

    Even n gives ``D^n_{n/2}``; odd n the equal-weight superposition of the
    two Dicke states adjacent to n/2.
    """
    n = _check_n(n, minimum=2)
    if n % 2 == 0:
        return dicke_state(n, n // 2)
    amps = np.zeros(n + 1, dtype=complex)
    amps[n // 2] = amps[n // 2 + 1] = np.sqrt(0.5)
    return SymmetricState(n, amps)


# -- evolution --------------------------------------------------------------

def apply_cost_phase(state: SymmetricState, gamma: float) -> SymmetricState:
    """``exp(-i gamma H_C)``; diagonal, so ``p_m`` is untouched."""
    phase = np.exp(-1j * gamma * cost_spectrum(state.n))
    return SymmetricState(state.n, phase * state.amps)


def apply_mixer_rotation(state: SymmetricState, beta: float) -> SymmetricState:
    """``exp(-i beta H_M) = exp(2i beta L_x)``."""
    w, v = _lx_eigh(state.n)
    amps = v @ (np.exp(2j * beta * w) * (v.T @ state.amps))
    return SymmetricState(state.n, amps)


# -- observables ------------------------------------------------------------

def pm_distribution(state: SymmetricState) -> np.ndarray:
    return np.abs(state.amps) ** 2


def collective_moments(state: SymmetricState) -> CollectiveMoments:
    """First and second moments of ``L_x, L_y, L_z``.

    Uses the tridiagonal ladder structure; ``<L_x^2> + <L_y^2>`` is obtained
    from ``L_+L_- + L_-L_+ = 2(L^2 - L_z^2)``.
    """
    n, a = state.n, state.amps
    c = _ladder(n)
    mz = _mz(n)
    p = np.abs(a) ** 2
    lp1 = np.sum(np.conj(a[1:]) * c * a[:-1]) if n else 0j
    lp2 = np.sum(np.conj(a[2:]) * c[1:] * c[:-1] * a[:-2]) if n > 1 else 0j
    mean_z = float(p @ mz)
    second_z = float(p @ mz ** 2)
    casimir = state.spin * (state.spin + 1)
    transverse = casimir - second_z
    return CollectiveMoments(
        mean_x=float(lp1.real),
        mean_y=float(lp1.imag),
        mean_z=mean_z,
        second_x=float((transverse + lp2.real) / 2),
        second_y=float((transverse - lp2.real) / 2),
        second_z=second_z,
    )


def energy_expectation(state: SymmetricState) -> float:
    """``<H_C>``, the negated expected cut size."""
    return float(pm_distribution(state) @ cost_spectrum(state.n))


def state_overlap(a: SymmetricState, b: SymmetricState) -> float:
    if a.n != b.n:
        raise ValueError(f"size mismatch: n={a.n} vs n={b.n}")
    return float(min(1.0, abs(np.vdot(a.amps, b.amps)) ** 2))


def phase_aligned(amps: np.ndarray) -> np.ndarray:
    """Remove the global phase so the largest-magnitude amplitude is real positive."""
    amps = np.asarray(amps, dtype=complex)
    mag = np.abs(amps)
    # first index among (near-)ties, so two simulators pick the same reference
    k = int(np.flatnonzero(mag >= mag.max() - 1e-7)[0])
    if amps[k] == 0:
        return amps.copy()
    return amps * (abs(amps[k]) / amps[k])
