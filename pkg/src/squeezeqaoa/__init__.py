"""Squeezed states from QAOA on complete graphs, and a squeezing-based QAOA benchmark."""

__version__ = "0.1.0"

from .spin import (  # noqa: E402
    CollectiveMoments,
    SymmetricState,
    apply_cost_phase,
    apply_mixer_rotation,
    coherent_plus_state,
    collective_moments,
    dicke_state,
    energy_expectation,
    maxcut_target_state,
    pm_distribution,
    state_overlap,
)
from .metrology import (  # noqa: E402
    MetrologyReport,
    gaussian_depth_estimate,
    metrology_report,
    qfi_entanglement_depth,
    qfi_pure,
    squeezing_db,
    witness_e1,
)
from .qaoa import (  # noqa: E402
    QaoaParams,
    SpsaConfig,
    beta_sweep,
    depth_one_optimum,
    energy_objective,
    landscape_scan,
    multistart_optimize,
    spsa_minimize,
    trial_state,
)
from .benchmark import (  # noqa: E402
    discontinuities,
    improvement_delta,
    p_alpha_empirical,
    p_alpha_gaussian,
    qaoa_line_cnot,
    qv_cnot_bound,
)
from .wigner import spin_wigner  # noqa: E402
