"""Squeezing-based QAOA benchmark on the complete unweighted graph.

On ``G_n`` the Dicke label ``m`` fixes the cut size ``c(m) = m(n - m)``.
``P_alpha`` is the probability that a sample cuts more than a fraction
``alpha`` of the maximum cut, either from a measured/simulated ``p_m`` or
from a Gaussian ``p_m`` whose width is set by the squeezing.
"""

from __future__ import annotations

import csv
import io
import json
import math
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.special import ndtr

from ._config import TOL

__all__ = [
    "BenchmarkWarning",
    "BenchmarkPoint",
    "DiscontinuityRecord",
    "cut_size",
    "max_cut_size",
    "m_bounds",
    "window",
    "p_alpha_empirical",
    "gaussian_pm",
    "p_alpha_gaussian",
    "benchmark_grid",
    "grid_to_csv",
    "discontinuities",
    "qaoa_line_cnot",
    "qv_cnot_bound",
    "improvement_delta",
]

# guards floor/ceil against rounding just below an integer
_INTEGER_SLACK = 1e-9


class BenchmarkWarning(UserWarning):
    pass


def cut_size(m: int, n: int) -> int:
    if not 0 <= m <= n:
        raise ValueError(f"m must lie in [0, {n}], got {m}")
    return m * (n - m)


def max_cut_size(n: int) -> int:
    return (n * n) // 4


def m_bounds(n: int, alpha: float) -> tuple[float, float]:
    """Real interval of m with ``c(m) >= alpha * c_max``.

    For even n this is ``n/2 (1 -+ sqrt(1 - alpha))``.  For odd n the same
    quadratic is solved with ``c_max = (n^2 - 1)/4``.
    """
    if not 0 < alpha <= 1:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    half_width = 0.5 * math.sqrt(max(n * n - 4 * alpha * max_cut_size(n), 0.0))
    return n / 2 - half_width, n / 2 + half_width


def window(n: int, alpha: float) -> tuple[int, int, bool]:
    """Integer range ``[ceil(m_-), floor(m_+)]`` and whether an end sits exactly on a bound.

    On an exact bound the included level has ``c(m) = alpha c_max``, not strictly more.
    """
    lo, hi = m_bounds(n, alpha)
    first = math.ceil(lo - _INTEGER_SLACK)
    last = math.floor(hi + _INTEGER_SLACK)
    on_bound = abs(lo - round(lo)) < _INTEGER_SLACK
    return max(first, 0), min(last, n), on_bound


def p_alpha_empirical(p_m: Sequence[float], n: int, alpha: float) -> float:
    p_m = np.asarray(p_m, dtype=float)
    if p_m.shape != (n + 1,):
        raise ValueError(f"p_m needs {n + 1} entries for n={n}")
    if np.any(p_m < -TOL.distribution) or abs(p_m.sum() - 1) > TOL.distribution:
        raise ValueError("p_m is not a normalised distribution")
    first, last = window(n, alpha)[:2]
    return float(min(max(p_m[first:last + 1].sum(), 0.0), 1.0))


def gaussian_pm(n: int, squeezing_db: float) -> np.ndarray:
    """Normal law centred on n/2 with ``S = 10 log10(4 sigma^2 / n)``, binned on integers.

    Bin m collects the mass of ``[m - 1/2, m + 1/2]``; the result is
    renormalised over m = 0..n.
    """
    if not math.isfinite(squeezing_db):
        raise ValueError("squeezing must be finite")
    sigma = math.sqrt(n / 4 * 10 ** (squeezing_db / 10))
    edges = (np.arange(n + 2) - 0.5 - n / 2) / sigma
    mass = np.diff(ndtr(edges))
    return mass / mass.sum()


def p_alpha_gaussian(n: int, squeezing_db: float, alpha: float) -> float:
    return p_alpha_empirical(gaussian_pm(n, squeezing_db), n, alpha)


@dataclass(frozen=True)
class BenchmarkPoint:
    n: int
    squeezing_db: float
    alpha: float
    p_alpha: float
    is_discontinuity: bool = False
    on_bound: bool = False

    def __post_init__(self):
        if not 0 <= self.p_alpha <= 1:
            raise ValueError("p_alpha must be a probability")


@dataclass(frozen=True)
class DiscontinuityRecord:
    alpha: float
    n_values: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.n_values, self.n_values[1:])):
            raise ValueError("n values must be strictly increasing")

    def to_json(self, **kwargs) -> str:
        return json.dumps({"alpha": self.alpha, "n_values": list(self.n_values)}, **kwargs)


def _half_span(n: int, alpha: float) -> int:
    return math.floor(n / 2 * math.sqrt(1 - alpha) + _INTEGER_SLACK)


def discontinuities(alpha: float, n_max: int) -> DiscontinuityRecord:
    """Even n <= n_max where ``floor(n/2 sqrt(1 - alpha))`` steps up from n - 2."""
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0, 1)")
    if n_max < 4:
        raise ValueError("n_max must be >= 4")
    jumps = tuple(n for n in range(4, n_max + 1, 2) if _half_span(n, alpha) > _half_span(n - 2, alpha))
    return DiscontinuityRecord(alpha, jumps)


def benchmark_grid(n_values: Iterable[int], squeezing_values: Iterable[float], alpha: float) -> list[BenchmarkPoint]:
    """Gaussian-model ``P_alpha`` for every (n, S) pair, n-major order."""
    n_values = list(n_values)
    squeezing_values = list(squeezing_values)
    if not n_values or not squeezing_values:
        raise ValueError("grid ranges must be non-empty")
    jumps = set(discontinuities(alpha, max(max(n_values), 4)).n_values) if alpha < 1 else set()
    points = []
    for n in n_values:
        on_bound = window(n, alpha)[2]
        for s in squeezing_values:
            points.append(BenchmarkPoint(n, float(s), alpha, p_alpha_gaussian(n, s, alpha),
                                         n in jumps, on_bound))
    return points


def grid_to_csv(points: Iterable[BenchmarkPoint]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "squeezing_db", "alpha", "p_alpha", "is_discontinuity"])
    for pt in points:
        writer.writerow([pt.n, f"{pt.squeezing_db:.12g}", f"{pt.alpha:.12g}",
                         f"{pt.p_alpha:.12g}", int(pt.is_discontinuity)])
    return buf.getvalue()


def qaoa_line_cnot(n: int) -> int:
    """CNOTs in a complete-graph cost layer routed on a line with a swap network."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return 3 * n * (n - 1) // 2 - n + 1


def qv_cnot_bound(n: int) -> int:
    """Upper bound on CNOTs in a width-n quantum-volume circuit on a line."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return 3 * n * (n // 2) + 3 * (n - 1) * (n // 2)


def improvement_delta(e_initial: float, e_achieved: float, e_target: float) -> float:
    """Fraction of the gap from the initial to the target energy that was closed.

    Values outside [0, 1] are returned unchanged with a ``BenchmarkWarning``;
    they indicate a broken optimisation run.
    """
    gap = e_initial - e_target
    if not gap > 0:
        raise ValueError("target energy must lie below the initial energy")
    delta = (e_initial - e_achieved) / gap
    if not 0 <= delta <= 1:
        warnings.warn(f"improvement delta {delta:.6g} outside [0, 1]", BenchmarkWarning, stacklevel=2)
    return delta
