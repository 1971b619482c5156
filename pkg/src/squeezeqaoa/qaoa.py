"""QAOA on the complete unweighted graph: trial states, objectives, SPSA,
landscape scans and mixer-angle sweeps.

Exact parameter periodicities used throughout: ``gamma`` has period 2*pi
(the cost spectrum ``-m(n - m)`` is integer) and ``beta`` has period pi up
to a global phase.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import minimize

from ._config import task_rng
from .metrology import squeezing_db
from .spin import (
    SymmetricState,
    _lx_eigh,
    apply_cost_phase,
    apply_mixer_rotation,
    coherent_plus_state,
    collective_moments,
    cost_spectrum,
    energy_expectation,
    maxcut_target_state,
    pm_distribution,
    state_overlap,
)

__all__ = [
    "QaoaParams",
    "SpsaConfig",
    "OptimizationTrace",
    "LandscapeResult",
    "SweepResult",
    "trial_state",
    "energy_objective",
    "energy_bounds",
    "spsa",
    "spsa_minimize",
    "multistart_optimize",
    "landscape_scan",
    "depth_one_optimum",
    "beta_sweep",
]

TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class QaoaParams:
    gammas: tuple[float, ...]
    betas: tuple[float, ...]

    def __post_init__(self):
        g = tuple(float(x) for x in np.atleast_1d(self.gammas))
        b = tuple(float(x) for x in np.atleast_1d(self.betas))
        if len(g) < 1 or len(g) != len(b):
            raise ValueError(f"need p >= 1 with equal lengths, got {len(g)} gammas and {len(b)} betas")
        if not all(math.isfinite(x) for x in g + b):
            raise ValueError("angles must be finite")
        object.__setattr__(self, "gammas", g)
        object.__setattr__(self, "betas", b)

    @property
    def p(self) -> int:
        return len(self.gammas)

    def to_vector(self) -> np.ndarray:
        return np.array(self.gammas + self.betas)

    @classmethod
    def from_vector(cls, x: Sequence[float]) -> "QaoaParams":
        x = np.asarray(x, dtype=float)
        if x.size % 2:
            raise ValueError("parameter vector must have even length")
        p = x.size // 2
        return cls(tuple(x[:p]), tuple(x[p:]))

    @classmethod
    def zeros(cls, p: int) -> "QaoaParams":
        return cls((0.0,) * p, (0.0,) * p)


@dataclass(frozen=True)
class SpsaConfig:
    max_iterations: int = 500
    calibration_iterations: int = 25
    shots: int | None = None
    seed: int = 0
    alpha: float = 0.602           # step-size decay exponent
    gamma: float = 0.101           # perturbation decay exponent
    perturbation: float = 0.2      # c, initial perturbation scale
    target_magnitude: float = 0.1  # first step size per parameter, rad
    stability_fraction: float = 0.1

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if not 0 <= self.calibration_iterations < self.max_iterations:
            raise ValueError("calibration_iterations must be < max_iterations")
        if self.shots is not None and self.shots < 1:
            raise ValueError("shots must be >= 1 when given")
        if self.perturbation <= 0:
            raise ValueError("perturbation must be positive")


@dataclass
class OptimizationTrace:
    params: np.ndarray          # (iterations + 1, dim), row 0 is the start point
    values: np.ndarray          # objective at each row of ``params``
    evaluations: int
    learning_rate: float        # calibrated a
    perturbation: float         # c
    stability: float            # A
    best_index: int = field(init=False)

    def __post_init__(self):
        self.best_index = int(np.argmin(self.values))

    @property
    def best_value(self) -> float:
        return float(self.values[self.best_index])

    @property
    def best_vector(self) -> np.ndarray:
        return self.params[self.best_index].copy()

    @property
    def best_params(self) -> QaoaParams:
        return QaoaParams.from_vector(self.best_vector)

    def summary(self) -> dict:
        return {
            "iterations": len(self.values) - 1,
            "evaluations": self.evaluations,
            "initial_value": float(self.values[0]),
            "final_value": float(self.values[-1]),
            "best_value": self.best_value,
            "best_iteration": self.best_index,
            "learning_rate": self.learning_rate,
            "perturbation": self.perturbation,
            "stability": self.stability,
        }


# -- states and objectives --------------------------------------------------

def trial_state(n: int, params: QaoaParams) -> SymmetricState:
    if n < 2:
        raise ValueError("QAOA needs n >= 2")
    state = coherent_plus_state(n)
    for gamma, beta in zip(params.gammas, params.betas):
        state = apply_mixer_rotation(apply_cost_phase(state, gamma), beta)
    return state


def energy_bounds(n: int) -> tuple[float, float]:
    """Range of ``<H_C>``: minus the maximum cut, and zero."""
    return -float((n * n) // 4), 0.0


def _as_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return task_rng(0 if seed is None else seed)


def energy_objective(n: int, params: QaoaParams, shots: int | None = None, seed=None) -> float:
    """``<H_C>`` exactly, or the mean of ``-c(m)`` over ``shots`` samples.

    ``seed`` may be an integer or a ``numpy.random.Generator`` (consumed).
    """
    state = trial_state(n, params)
    if shots is None:
        return energy_expectation(state)
    counts = _as_rng(seed).multinomial(int(shots), pm_distribution(state) / pm_distribution(state).sum())
    return float(counts @ cost_spectrum(n) / shots)


# -- SPSA ---------------------------------------------------------------------

def spsa(
    objective: Callable[[np.ndarray], float],
    x0: Sequence[float],
    config: SpsaConfig = SpsaConfig(),
    rng: np.random.Generator | None = None,
) -> OptimizationTrace:
    """Simultaneous-perturbation stochastic approximation with self-calibration.

    Gains are ``a_k = a / (k + A)^alpha`` and ``c_k = c / k^gamma`` with
    ``A = stability_fraction * max_iterations``.  Before iterating,
    ``calibration_iterations`` random +-c probes around ``x0`` estimate the
    mean gradient magnitude, and ``a`` is chosen so the first step moves each
    parameter by about ``target_magnitude``.
    """
    rng = task_rng(config.seed) if rng is None else rng
    x = np.array(x0, dtype=float)
    dim = x.size
    A = config.stability_fraction * config.max_iterations
    c = config.perturbation
    evaluations = 0

    def probe(xk, ck):
        nonlocal evaluations
        delta = rng.choice((-1.0, 1.0), size=dim)
        f_plus = objective(xk + ck * delta)
        f_minus = objective(xk - ck * delta)
        evaluations += 2
        return f_plus, f_minus, delta

    if config.calibration_iterations:
        mags = []
        for _ in range(config.calibration_iterations):
            f_plus, f_minus, _ = probe(x, c)
            mags.append(abs(f_plus - f_minus) / (2 * c))
        gradient_scale = float(np.mean(mags))
    else:
        gradient_scale = 0.0
    if gradient_scale > 0 and math.isfinite(gradient_scale):
        a = config.target_magnitude * (1 + A) ** config.alpha / gradient_scale
    else:
        a = config.target_magnitude * (1 + A) ** config.alpha

    history = [x.copy()]
    values = [objective(x)]
    evaluations += 1
    for k in range(1, config.max_iterations + 1):
        ak = a / (k + A) ** config.alpha
        ck = c / k ** config.gamma
        f_plus, f_minus, delta = probe(x, ck)
        x = x - ak * (f_plus - f_minus) / (2 * ck) * delta
        history.append(x.copy())
        values.append(objective(x))
        evaluations += 1
    return OptimizationTrace(
        params=np.array(history),
        values=np.array(values, dtype=float),
        evaluations=evaluations,
        learning_rate=float(a),
        perturbation=float(c),
        stability=float(A),
    )


def spsa_minimize(n: int, p: int, config: SpsaConfig, initial: QaoaParams, task: int = 0) -> OptimizationTrace:
    """Minimise ``<H_C>`` at depth ``p`` starting from ``initial``.

    Randomness (perturbations, and shot sampling when ``config.shots`` is
    set) comes from the streams keyed by ``(config.seed, task)``.
    """
    if initial.p != p:
        raise ValueError(f"initial params have depth {initial.p}, expected {p}")
    shot_rng = task_rng(config.seed, task, stream=2)

    def objective(x):
        return energy_objective(n, QaoaParams.from_vector(x), config.shots, shot_rng)

    return spsa(objective, initial.to_vector(), config, task_rng(config.seed, task, stream=1))


def random_initial(p: int, seed: int, task: int) -> QaoaParams:
    """Uniform start in the fundamental domain gamma in [0, 2pi), beta in [0, pi)."""
    rng = task_rng(seed, task, stream=0)
    return QaoaParams(tuple(rng.uniform(0, TWO_PI, p)), tuple(rng.uniform(0, math.pi, p)))


def multistart_optimize(n: int, p: int, restarts: int, config: SpsaConfig = SpsaConfig()):
    """Best of ``restarts`` seeded SPSA runs; restart ``r`` uses task index ``r``.

    Returns ``(best_trace, all_traces)``.  Because restart streams do not
    depend on the restart count, adding restarts can only improve the best.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    traces = [spsa_minimize(n, p, config, random_initial(p, config.seed, r), task=r)
              for r in range(restarts)]
    best = min(range(restarts), key=lambda r: (traces[r].best_value, r))
    return traces[best], traces


# -- depth-one landscape ------------------------------------------------------

@dataclass
class LandscapeResult:
    n: int
    gammas: np.ndarray
    betas: np.ndarray
    energies: np.ndarray        # shape (len(gammas), len(betas))
    min_energy: float
    argmin: tuple[float, float]
    dicke_overlap: float

    @property
    def approximation_ratio(self) -> float:
        return self.min_energy / energy_bounds(self.n)[0]


def _grid(bounds, resolution, endpoint=False) -> np.ndarray:
    lo, hi = map(float, bounds)
    if resolution < 2:
        raise ValueError("resolution must be >= 2 per axis")
    if not hi > lo:
        raise ValueError(f"empty range ({lo}, {hi})")
    return np.linspace(lo, hi, int(resolution), endpoint=endpoint)


def landscape_scan(
    n: int,
    gamma_range=(0.0, TWO_PI),
    beta_range=(0.0, math.pi),
    resolution: int | tuple[int, int] = 400,
) -> LandscapeResult:
    """Exact depth-one energies on a ``gamma x beta`` grid (upper ends excluded).

    Ties for the minimum go to the smallest ``(gamma, beta)``.
    """
    rg, rb = (resolution, resolution) if np.isscalar(resolution) else resolution
    gammas, betas = _grid(gamma_range, rg), _grid(beta_range, rb)
    start = coherent_plus_state(n).amps
    spec = cost_spectrum(n)
    w, v = _lx_eigh(n)
    # columns: state after the cost phase, one per gamma, in the L_x eigenbasis
    rotated = v.T @ (np.exp(-1j * np.outer(spec, gammas)) * start[:, None])
    energies = np.empty((gammas.size, betas.size))
    for j, beta in enumerate(betas):
        psi = v @ (np.exp(2j * beta * w)[:, None] * rotated)
        energies[:, j] = spec @ (np.abs(psi) ** 2)
    flat = int(np.argmin(energies))
    i, j = divmod(flat, betas.size)
    best = trial_state(n, QaoaParams((gammas[i],), (betas[j],)))
    return LandscapeResult(
        n=n,
        gammas=gammas,
        betas=betas,
        energies=energies,
        min_energy=float(energies[i, j]),
        argmin=(float(gammas[i]), float(betas[j])),
        dicke_overlap=state_overlap(best, maxcut_target_state(n)),
    )


def depth_one_optimum(n: int, resolution: int = 200) -> tuple[QaoaParams, float]:
    """Grid scan followed by a Nelder-Mead polish of the best grid point."""
    scan = landscape_scan(n, resolution=resolution)

    def f(x):
        return energy_objective(n, QaoaParams((x[0],), (x[1],)))

    res = minimize(f, np.array(scan.argmin), method="Nelder-Mead",
                   options={"xatol": 1e-10, "fatol": 1e-13, "maxiter": 4000})
    x = res.x if res.fun <= scan.min_energy else np.array(scan.argmin)
    g = float(np.mod(x[0], TWO_PI))
    b = float(np.mod(x[1], math.pi))
    params = QaoaParams((g,), (b,))
    return params, energy_objective(n, params)


# -- mixer-angle sweeps -------------------------------------------------------

@dataclass
class SweepResult:
    n: int
    betas: np.ndarray
    squeezing_db: np.ndarray
    var_z: np.ndarray

    def best(self) -> tuple[float, float]:
        """(beta, squeezing) with the most negative squeezing."""
        k = int(np.argmin(self.squeezing_db))
        return float(self.betas[k]), float(self.squeezing_db[k])


def beta_sweep(
    n: int,
    gammas: Sequence[float],
    beta_range=(0.0, math.pi),
    steps: int = 1000,
    prior_betas: Sequence[float] = (),
) -> SweepResult:
    """Squeezing versus the final mixer angle.

    The cost phases ``gammas`` are applied layer by layer, with
    ``prior_betas`` as the mixer angles of all but the last layer; the last
    mixer angle is swept over ``steps`` points spanning ``beta_range``
    inclusively.
    """
    gammas = list(np.atleast_1d(gammas))
    if len(prior_betas) != len(gammas) - 1:
        raise ValueError("need one prior beta per layer except the last")
    if steps < 2:
        raise ValueError("steps must be >= 2")
    betas = np.linspace(float(beta_range[0]), float(beta_range[1]), int(steps))
    state = coherent_plus_state(n)
    for gamma, beta in zip(gammas[:-1], prior_betas):
        state = apply_mixer_rotation(apply_cost_phase(state, gamma), beta)
    state = apply_cost_phase(state, gammas[-1])
    var = np.empty(betas.size)
    for k, beta in enumerate(betas):
        var[k] = max(collective_moments(apply_mixer_rotation(state, beta)).var_z, 0.0)
    return SweepResult(n, betas, np.array([squeezing_db(v, n) for v in var]), var)
