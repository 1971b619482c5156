"""Brute-force 2^n statevector simulation and MaxCut/QUBO problem machinery.

Bit ``i`` of a basis-state index is qubit ``i``; bit value 0 is ``|0>``
(``Z = +1``) and corresponds to binary variable ``x_i = 0`` and spin
``z_i = +1``.  Bitstrings given as text list qubit 0 first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from ._config import MAX_FULL_QUBITS, TOL, task_rng
from .spin import SymmetricState

__all__ = [
    "FullState",
    "WeightedGraph",
    "IsingModel",
    "maxcut_ising",
    "qubo_to_ising",
    "uniform_superposition",
    "evolve_qaoa_full",
    "project_symmetric",
    "symmetric_components",
    "sample_bitstrings",
    "cut_value",
    "bits_of",
    "parse_edge_list",
    "format_edge_list",
    "load_graph",
    "brute_force_maxcut",
]


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise ValueError(f"{n} qubits exceed the statevector cap of {cap}")


@dataclass(frozen=True, eq=False)
class FullState:
    n: int
    amps: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amps, dtype=complex).reshape(-1)
        if amps.shape[0] != 2 ** self.n:
            raise ValueError(f"expected 2**{self.n} amplitudes, got {amps.shape[0]}")
        if abs(np.vdot(amps, amps).real - 1.0) > TOL.norm:
            raise ValueError("full state is not normalised")
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amps) ** 2


@dataclass(frozen=True)
class WeightedGraph:
    n: int
    edges: tuple[tuple[int, int, float], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one node")
        seen = set()
        clean = []
        for i, j, w in self.edges:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"self-loop on node {i}")
            if i > j:
                i, j = j, i
            if not 0 <= i < j < self.n:
                raise ValueError(f"edge ({i}, {j}) outside 0..{self.n - 1}")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
            clean.append((i, j, float(w)))
        object.__setattr__(self, "edges", tuple(clean))

    @classmethod
    def complete(cls, n: int, weight: float = 1.0) -> "WeightedGraph":
        return cls(n, tuple((i, j, weight) for i in range(n) for j in range(i + 1, n)))

    @property
    def total_weight(self) -> float:
        return sum(w for _, _, w in self.edges)


@dataclass(frozen=True)
class IsingModel:
    """``E(z) = sum J_ij z_i z_j + sum h_i z_i + offset`` with ``z_i = +-1``."""

    n: int
    couplings: dict = field(default_factory=dict)
    fields: np.ndarray = None
    offset: float = 0.0

    def __post_init__(self):
        h = np.zeros(self.n) if self.fields is None else np.asarray(self.fields, dtype=float)
        if h.shape != (self.n,):
            raise ValueError("fields must have one entry per spin")
        object.__setattr__(self, "fields", h)

    def energy(self, z: Sequence[int]) -> float:
        z = np.asarray(z, dtype=float)
        e = self.offset + float(self.fields @ z)
        for (i, j), J in self.couplings.items():
            e += J * z[i] * z[j]
        return e

    def diagonal(self) -> np.ndarray:
        """Energy of every computational basis state, indexed as the statevector."""
        idx = np.arange(2 ** self.n)
        z = 1 - 2 * ((idx[:, None] >> np.arange(self.n)) & 1)
        e = np.full(idx.shape, float(self.offset))
        e += z @ self.fields
        for (i, j), J in self.couplings.items():
            e += J * z[:, i] * z[:, j]
        return e


def maxcut_ising(graph: WeightedGraph) -> IsingModel:
    """Ising form whose energy is minus the cut weight."""
    couplings = {}
    for i, j, w in graph.edges:
        couplings[(i, j)] = couplings.get((i, j), 0.0) + w / 2
    return IsingModel(graph.n, couplings, np.zeros(graph.n), -graph.total_weight / 2)


def qubo_to_ising(sigma) -> IsingModel:
    """Map ``x^T sigma x`` over ``x in {0,1}^n`` via ``x_i = (1 - z_i)/2``."""
    sigma = np.asarray(sigma, dtype=float)
    if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1]:
        raise ValueError(f"QUBO matrix must be square, got shape {sigma.shape}")
    s = (sigma + sigma.T) / 2
    n = s.shape[0]
    diag = np.diag(s)
    off = s - np.diag(diag)
    couplings = {(i, j): s[i, j] / 2 for i in range(n) for j in range(i + 1, n) if s[i, j] != 0}
    fields = -diag / 2 - off.sum(axis=1) / 2
    offset = diag.sum() / 2 + off.sum() / 4
    return IsingModel(n, couplings, fields, float(offset))


# -- evolution --------------------------------------------------------------

def uniform_superposition(n: int, cap: int = MAX_FULL_QUBITS) -> FullState:
    _check_cap(n, cap)
    return FullState(n, np.full(2 ** n, 2 ** (-n / 2), dtype=complex))


def _apply_x_rotation_all(amps: np.ndarray, n: int, beta: float) -> np.ndarray:
    # exp(i beta X) on every qubit, i.e. exp(-i beta H_M) with H_M = -sum X_i
    c, s = math.cos(beta), 1j * math.sin(beta)
    psi = amps.reshape((2,) * n) if n else amps
    for axis in range(n):
        a0 = np.take(psi, 0, axis=axis)
        a1 = np.take(psi, 1, axis=axis)
        psi = np.stack([c * a0 + s * a1, s * a0 + c * a1], axis=axis)
    return psi.reshape(-1)


def evolve_qaoa_full(model: IsingModel, params, cap: int = MAX_FULL_QUBITS) -> FullState:
    """QAOA trial state for an arbitrary Ising cost function.

    ``params`` is anything with ``gammas`` and ``betas`` sequences.
    """
    n = model.n
    _check_cap(n, cap)
    amps = uniform_superposition(n, cap).amps.copy()
    diag = model.diagonal()
    for gamma, beta in zip(params.gammas, params.betas):
        amps = np.exp(-1j * gamma * diag) * amps
        amps = _apply_x_rotation_all(amps, n, beta)
    return FullState(n, amps)


def _weights(n: int) -> np.ndarray:
    idx = np.arange(2 ** n)
    return ((idx[:, None] >> np.arange(n)) & 1).sum(axis=1)


def symmetric_components(full: FullState) -> np.ndarray:
    """Overlaps ``<D^n_m|full>`` for m = 0..n (m counts |0> qubits)."""
    n = full.n
    zeros = n - _weights(n)
    comp = np.bincount(zeros, weights=full.amps.real, minlength=n + 1) + \
        1j * np.bincount(zeros, weights=full.amps.imag, minlength=n + 1)
    return comp / np.sqrt([math.comb(n, m) for m in range(n + 1)])


def project_symmetric(full: FullState) -> tuple[SymmetricState, float]:
    """Projection onto the symmetric subspace and the weight left outside it.

    The returned state is renormalised; when the projection vanishes the
    all-|0> Dicke state is returned with residual 1.
    """
    n = full.n
    comp = symmetric_components(full)
    kept = float(np.vdot(comp, comp).real)
    residual = min(1.0, max(0.0, 1.0 - kept))
    if kept == 0:
        fallback = np.zeros(n + 1)
        fallback[n] = 1
        return SymmetricState(n, fallback), 1.0
    return SymmetricState(n, comp / math.sqrt(kept)), residual


def sample_bitstrings(full: FullState, shots: int, seed: int, task: int = 0) -> np.ndarray:
    """Draw basis-state indices i.i.d. from ``|amps|^2``.

    Inverse-CDF sampling on a seeded counter-based generator: the result
    depends only on ``(seed, task)``.
    """
    if shots < 1:
        raise ValueError("shots must be >= 1")
    cdf = np.cumsum(full.probabilities())
    cdf /= cdf[-1]
    u = task_rng(seed, task).random(int(shots))
    return np.minimum(np.searchsorted(cdf, u, side="right"), cdf.size - 1)


def bits_of(index: int, n: int) -> np.ndarray:
    return (int(index) >> np.arange(n)) & 1


def _as_bits(bitstring, n: int) -> np.ndarray:
    if isinstance(bitstring, str):
        bits = np.array([int(ch) for ch in bitstring.strip()])
    else:
        bits = np.asarray(bitstring, dtype=int).reshape(-1)
    if bits.size != n:
        raise ValueError(f"bitstring has length {bits.size}, graph has {n} nodes")
    if np.any((bits != 0) & (bits != 1)):
        raise ValueError("bitstring entries must be 0 or 1")
    return bits


def cut_value(bitstring, graph: WeightedGraph) -> float:
    """Total weight of edges whose endpoints carry different bits."""
    b = _as_bits(bitstring, graph.n)
    return float(sum(w for i, j, w in graph.edges if b[i] != b[j]))


# -- edge-list files ----------------------------------------------------------

def parse_edge_list(text: str) -> WeightedGraph:
    """Parse ``n <count>`` followed by ``i j weight`` lines.

    Blank lines and ``#`` comments are skipped and any whitespace separates
    fields; indices must be non-negative integers below the node count.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise ValueError(f"line {lineno}: expected header 'n <count>', got {raw!r}")
            n = _strict_int(tokens[1], lineno)
            continue
        if len(tokens) != 3:
            raise ValueError(f"line {lineno}: expected 'i j weight', got {raw!r}")
        i, j = _strict_int(tokens[0], lineno), _strict_int(tokens[1], lineno)
        try:
            w = float(tokens[2])
        except ValueError:
            raise ValueError(f"line {lineno}: bad weight {tokens[2]!r}") from None
        edges.append((i, j, w))
    if n is None:
        raise ValueError("missing 'n <count>' header")
    try:
        return WeightedGraph(n, tuple(edges))
    except ValueError as exc:
        raise ValueError(f"invalid graph: {exc}") from None


def _strict_int(token: str, lineno: int) -> int:
    if not token.isdigit():
        raise ValueError(f"line {lineno}: {token!r} is not a non-negative integer index")
    return int(token)


def format_edge_list(graph: WeightedGraph) -> str:
    lines = [f"n {graph.n}"]
    lines += [f"{i} {j} {w!r}" for i, j, w in graph.edges]
    return "\n".join(lines) + "\n"


def load_graph(path: str | Path) -> WeightedGraph:
    return parse_edge_list(Path(path).read_text())


def brute_force_maxcut(graph: WeightedGraph) -> float:
    """Best cut by enumeration (small graphs only)."""
    _check_cap(graph.n, 20)
    best = 0.0
    for idx in range(2 ** graph.n):
        best = max(best, cut_value(bits_of(idx, graph.n), graph))
    return best
