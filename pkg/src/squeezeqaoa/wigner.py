"""Spin Wigner function on the collective Bloch sphere.

Convention: ``W(theta, phi) = Tr[rho Delta(theta, phi)]`` with the kernel
``Delta = R Delta_0 R^dagger``, ``R = exp(-i phi L_z) exp(-i theta L_y)`` and

    Delta_0 = sum_m |m><m| sum_{k=0}^{2l} (2k+1)/(2l+1) <l m; k 0 | l m>

This is the multipole expansion ``sum_kq rho_kq Y_kq`` rescaled so that the
maximally mixed state is the constant ``1/(2l+1)`` and
``(2l+1)/(4 pi) * integral W dOmega = 1``.  Values can be negative.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy import Rational
from sympy.physics.wigner import clebsch_gordan

from .spin import SymmetricState, _mz, spin_matrices

__all__ = ["WignerGrid", "spin_wigner", "wigner_at", "pole_kernel"]


@lru_cache(maxsize=None)
def pole_kernel(n: int) -> np.ndarray:
    """Diagonal of ``Delta_0`` in the Dicke basis (index m = m_z + n/2)."""
    j = Rational(n, 2)
    diag = np.zeros(n + 1)
    for idx in range(n + 1):
        m = Rational(2 * idx - n, 2)
        diag[idx] = sum(
            (2 * k + 1) * float(clebsch_gordan(j, k, j, m, 0, m)) for k in range(n + 1)
        ) / (n + 1)
    diag.flags.writeable = False
    return diag


@lru_cache(maxsize=None)
def _ly_eigh(n: int):
    _, ly, _ = spin_matrices(n)
    w, u = np.linalg.eigh(ly)
    return w, u


def _polar_rotations(n: int, thetas: np.ndarray) -> np.ndarray:
    """Stack of ``exp(i theta L_y)`` matrices."""
    w, u = _ly_eigh(n)
    return np.einsum("ij,tj,kj->tik", u, np.exp(1j * np.outer(thetas, w)), u.conj())


def wigner_at(state: SymmetricState, theta, phi) -> np.ndarray:
    """Wigner function at arbitrary points (broadcast over ``theta``, ``phi``)."""
    theta, phi = np.broadcast_arrays(np.asarray(theta, float), np.asarray(phi, float))
    flat_t, flat_p = theta.reshape(-1), phi.reshape(-1)
    n = state.n
    phased = np.exp(1j * np.outer(_mz(n), flat_p)) * state.amps[:, None]   # (n+1, P)
    rot = _polar_rotations(n, flat_t)                                       # (P, n+1, n+1)
    back = np.einsum("pik,kp->ip", rot, phased)
    values = pole_kernel(n) @ (np.abs(back) ** 2)
    return values.reshape(theta.shape)


@dataclass
class WignerGrid:
    thetas: np.ndarray      # polar angles, Gauss-Legendre nodes in cos(theta)
    phis: np.ndarray        # azimuths, uniform on [0, 2 pi)
    values: np.ndarray      # shape (len(thetas), len(phis))
    spin: float
    weights: np.ndarray     # quadrature weights per grid point, sum = 4 pi

    def normalization(self) -> float:
        """``(2l+1)/(4 pi) * integral W``; exactly 1 when the grid resolves rank 2l."""
        return float((2 * self.spin + 1) / (4 * math.pi) * np.sum(self.weights * self.values))

    def min(self) -> float:
        return float(self.values.min())

    def argmax(self) -> tuple[float, float]:
        i, j = np.unravel_index(int(np.argmax(self.values)), self.values.shape)
        return float(self.thetas[i]), float(self.phis[j])

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["theta", "phi", "value"])
        for i, t in enumerate(self.thetas):
            for j, p in enumerate(self.phis):
                writer.writerow([f"{t:.12g}", f"{p:.12g}", f"{self.values[i, j]:.12g}"])
        return buf.getvalue()


def spin_wigner(state: SymmetricState, resolution: int | tuple[int, int] = 64) -> WignerGrid:
    """Wigner function on a Gauss-Legendre (polar) x uniform (azimuth) grid.

    The quadrature integrates the expansion exactly once there are more
    than ``l`` polar nodes and more than ``2l`` azimuths.
    """
    nt, nphi = (resolution, resolution) if np.isscalar(resolution) else resolution
    if nt < 8 or nphi < 8:
        raise ValueError("resolution must be >= 8 per axis")
    x, wx = np.polynomial.legendre.leggauss(int(nt))
    thetas = np.arccos(x[::-1])          # north pole first
    wt = wx[::-1]
    phis = np.linspace(0, 2 * math.pi, int(nphi), endpoint=False)
    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    values = wigner_at(state, tt, pp)
    weights = np.outer(wt, np.full(phis.size, 2 * math.pi / phis.size))
    return WignerGrid(thetas, phis, values, state.spin, weights)
