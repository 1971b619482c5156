"""Squeezing, quantum Fisher information and entanglement criteria for
symmetric pure states."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, fields

from ._config import TOL
from .spin import (
    SymmetricState,
    collective_moments,
    energy_expectation,
    maxcut_target_state,
    state_overlap,
)

__all__ = [
    "MetrologyReport",
    "squeezing_db",
    "qfi_pure",
    "witness_e1",
    "separable_fisher_bound",
    "qfi_entanglement_depth",
    "gaussian_depth_estimate",
    "metrology_report",
]

NEG_INF_TOKEN = "neg_inf"


def squeezing_db(var_z: float, n: int) -> float:
    """``10 log10(Var(L_z) / (n/4))``; zero variance gives ``-inf``."""
    if var_z < -TOL.variance_floor:
        raise ValueError(f"negative variance {var_z!r}")
    if var_z <= 0:
        return -math.inf
    return 10 * math.log10(var_z / (n / 4))


def qfi_pure(state: SymmetricState, axis: str) -> float:
    """Quantum Fisher information of a pure state for ``L_axis``: 4 Var(L_axis)."""
    mom = collective_moments(state)
    try:
        var = {"x": mom.var_x, "y": mom.var_y, "z": mom.var_z}[axis]
    except KeyError:
        raise ValueError(f"axis must be 'x', 'y' or 'z', got {axis!r}") from None
    return 4 * var


def witness_e1(state: SymmetricState) -> tuple[bool, float]:
    """Separability bound ``<L_z^2> >= n/4``; returns (violated, n/4 - <L_z^2>).

    The bound certifies entanglement for states centred on the equator
    (``<L_z> = 0``), which is where QAOA trial states on the complete graph
    live.
    """
    margin = state.n / 4 - collective_moments(state).second_z
    return margin > 0, margin


def separable_fisher_bound(k: int, n: int) -> int:
    """Largest Fisher information reachable by states with at most k-particle entanglement."""
    s, r = divmod(n, k)
    return s * k * k + r * r


def qfi_entanglement_depth(fq: float, n: int) -> int:
    """Witnessed entanglement depth: the largest ``k + 1`` with ``fq > s k^2 + r^2``."""
    if fq < 0:
        raise ValueError("Fisher information must be non-negative")
    depth = 1
    for k in range(1, n):
        if fq > separable_fisher_bound(k, n):
            depth = k + 1
    return depth


def gaussian_depth_estimate(squeezing: float, n: int) -> int:
    """Depth estimate from squeezing alone, via ``F_Q / n ~ 10^(-S/10)``.

    Only an estimate: it assumes a Gaussian state.
    """
    if math.isnan(squeezing):
        raise ValueError("squeezing must be a number")
    fq = math.inf if squeezing == -math.inf else n * 10 ** (-squeezing / 10)
    return qfi_entanglement_depth(fq, n)


@dataclass(frozen=True)
class MetrologyReport:
    n: int
    squeezing_db: float
    var_z: float
    exp_z: float
    exp_z2: float
    qfi_x: float
    qfi_y: float
    e1_entangled: bool
    e1_margin: float
    e2_depth: int               # witnessed, from qfi_y
    e3_depth_estimate: int      # Gaussian estimate, from squeezing
    dicke_overlap: float | None         # against the max-cut target state; None for n = 1
    energy: float
    approximation_ratio: float | None   # <H_C> / min H_C; None for n = 1

    def to_dict(self) -> dict:
        out = asdict(self)
        for key, value in out.items():
            if isinstance(value, float) and value == -math.inf:
                out[key] = NEG_INF_TOKEN
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "MetrologyReport":
        kwargs = {}
        for f in fields(cls):
            value = data[f.name]
            if value == NEG_INF_TOKEN:
                value = -math.inf
            kwargs[f.name] = value
        return cls(**kwargs)


def metrology_report(state: SymmetricState) -> MetrologyReport:
    n = state.n
    mom = collective_moments(state)
    var_z = max(mom.var_z, 0.0)
    s = squeezing_db(var_z, n)
    qfi_y = 4 * mom.var_y
    entangled, margin = witness_e1(state)
    energy = energy_expectation(state)
    target = maxcut_target_state(n) if n >= 2 else None
    return MetrologyReport(
        n=n,
        squeezing_db=s,
        var_z=var_z,
        exp_z=mom.mean_z,
        exp_z2=mom.second_z,
        qfi_x=4 * mom.var_x,
        qfi_y=qfi_y,
        e1_entangled=bool(entangled),
        e1_margin=float(margin),
        e2_depth=qfi_entanglement_depth(max(qfi_y, 0.0), n),
        e3_depth_estimate=gaussian_depth_estimate(s, n),
        dicke_overlap=state_overlap(state, target) if target else None,
        energy=energy,
        approximation_ratio=energy / -float((n * n) // 4) if n >= 2 else None,
    )
