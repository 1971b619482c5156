"""Shared numerical tolerances and size limits."""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Tolerances:
    norm: float = 1e-9
    unitarity: float = 1e-10
    distribution: float = 1e-6
    variance_floor: float = 1e-10


TOL = Tolerances()

# dense symmetric-subspace operations
MAX_SYMMETRIC_N = 4096
# brute-force statevector
MAX_FULL_QUBITS = 16


def task_rng(seed: int, task: int = 0, stream: int = 0) -> np.random.Generator:
    """Counter-based generator keyed by ``(seed, task, stream)``.

    Independent tasks (restarts, grid rows, ...) get disjoint streams, so
    serial and parallel execution draw identical numbers.
    """
    key = np.random.SeedSequence([int(seed), int(task), int(stream)])
    return np.random.Generator(np.random.Philox(key))
