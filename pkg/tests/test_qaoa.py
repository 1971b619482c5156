import math

import numpy as np
import pytest

from squeezeqaoa.metrology import metrology_report, squeezing_db
from squeezeqaoa.qaoa import (
    QaoaParams,
    SpsaConfig,
    beta_sweep,
    depth_one_optimum,
    energy_bounds,
    energy_objective,
    landscape_scan,
    multistart_optimize,
    random_initial,
    spsa,
    spsa_minimize,
    trial_state,
)
from squeezeqaoa.spin import coherent_plus_state, collective_moments, maxcut_target_state, state_overlap

from conftest import THREE_LAYER_BETAS, THREE_LAYER_GAMMAS

# pinned with the dense Kronecker-product oracle (expm of H_C and H_M on 2^4 amplitudes)
N4_P2_VAR_Z = 1.0598252948931044e-06
N4_P2_SQUEEZING = -59.74765719374058
N4_P2_OVERLAP = 0.9999997238177651


def test_params_validation():
    with pytest.raises(ValueError):
        QaoaParams((0.1, 0.2), (0.3,))
    with pytest.raises(ValueError):
        QaoaParams((), ())
    p = QaoaParams.from_vector([1, 2, 3, 4])
    assert p.gammas == (1, 2) and p.betas == (3, 4) and p.p == 2


def test_zero_params_give_coherent_state():
    np.testing.assert_allclose(trial_state(7, QaoaParams.zeros(3)).amps, coherent_plus_state(7).amps, atol=1e-14)


def test_three_layer_squeezing():
    s = trial_state(12, QaoaParams(THREE_LAYER_GAMMAS, THREE_LAYER_BETAS))
    assert squeezing_db(collective_moments(s).var_z, 12) == pytest.approx(-9.71, abs=0.05)


def test_n4_depth2_regression():
    s = trial_state(4, QaoaParams((0.918, -0.257), (-0.711, -2.175)))
    r = metrology_report(s)
    assert r.var_z == pytest.approx(N4_P2_VAR_Z, rel=1e-6)
    assert r.squeezing_db == pytest.approx(N4_P2_SQUEEZING, abs=1e-6)
    assert r.dicke_overlap == pytest.approx(N4_P2_OVERLAP, abs=1e-12)


def test_energy_objective_exact_and_bounds():
    assert energy_objective(12, QaoaParams.zeros(1)) == pytest.approx(-33)
    rng = np.random.default_rng(0)
    for _ in range(20):
        e = energy_objective(12, QaoaParams.from_vector(rng.uniform(-4, 4, 6)))
        assert -36 - 1e-9 <= e <= 1e-9
    assert energy_bounds(7) == (-12, 0)


def test_energy_objective_shots_converge():
    params = QaoaParams((0.5, 1.1), (0.3, 2.0))
    n = 8
    exact = energy_objective(n, params)
    s = trial_state(n, params)
    from squeezeqaoa.spin import cost_spectrum, pm_distribution
    p = pm_distribution(s)
    sd = math.sqrt(p @ cost_spectrum(n) ** 2 - exact ** 2)
    shots = 10 ** 6
    est = energy_objective(n, params, shots=shots, seed=5)
    assert abs(est - exact) < 3 * sd / math.sqrt(shots)
    assert est == energy_objective(n, params, shots=shots, seed=5)


def test_spsa_on_convex_quadratic():
    center = np.array([0.3, -1.2, 2.0, 0.7])
    trace = spsa(lambda x: float(np.sum((x - center) ** 2)), np.zeros(4), SpsaConfig(seed=3))
    assert trace.best_value < 1e-2
    assert trace.best_value == trace.values.min()
    assert trace.evaluations == 2 * 25 + 1 + 3 * 500


def test_spsa_deterministic():
    cfg = SpsaConfig(max_iterations=60, seed=11)
    init = QaoaParams((0.2, 0.4), (0.1, 0.3))
    a = spsa_minimize(6, 2, cfg, init)
    b = spsa_minimize(6, 2, cfg, init)
    np.testing.assert_array_equal(a.params, b.params)
    np.testing.assert_array_equal(a.values, b.values)


def test_spsa_shot_mode_deterministic():
    cfg = SpsaConfig(max_iterations=30, calibration_iterations=5, shots=256, seed=2)
    init = QaoaParams((0.2,), (0.1,))
    np.testing.assert_array_equal(spsa_minimize(6, 1, cfg, init).values, spsa_minimize(6, 1, cfg, init).values)


def test_spsa_config_validation():
    with pytest.raises(ValueError):
        SpsaConfig(max_iterations=10, calibration_iterations=10)
    with pytest.raises(ValueError):
        SpsaConfig(shots=0)


def test_multistart_reduces_to_single_run():
    cfg = SpsaConfig(max_iterations=40, seed=4)
    best, traces = multistart_optimize(5, 1, 1, cfg)
    direct = spsa_minimize(5, 1, cfg, random_initial(1, 4, 0), task=0)
    np.testing.assert_array_equal(best.values, direct.values)


def test_multistart_monotone_in_restarts():
    cfg = SpsaConfig(max_iterations=40, seed=8)
    values = [multistart_optimize(6, 1, r, cfg)[0].best_value for r in (1, 2, 4, 6)]
    assert all(b <= a for a, b in zip(values, values[1:]))


def test_multistart_reaches_n4_dicke():
    best, _ = multistart_optimize(4, 2, 10, SpsaConfig(seed=7))
    assert best.best_value == pytest.approx(-4, abs=0.01)


@pytest.mark.slow
def test_multistart_depth_one_cannot_beat_landscape():
    best, _ = multistart_optimize(12, 1, 5, SpsaConfig(seed=7))
    assert best.best_value >= -35.48


def test_landscape_small_and_consistent():
    scan = landscape_scan(6, resolution=(24, 12))
    for i in (0, 5, 17):
        for j in (0, 3, 11):
            e = energy_objective(6, QaoaParams((scan.gammas[i],), (scan.betas[j],)))
            assert scan.energies[i, j] == pytest.approx(e, abs=1e-12)
    i, j = np.unravel_index(np.argmin(scan.energies), scan.energies.shape)
    assert scan.argmin == (scan.gammas[i], scan.betas[j])
    s = trial_state(6, QaoaParams((scan.argmin[0],), (scan.argmin[1],)))
    assert scan.dicke_overlap == pytest.approx(state_overlap(s, maxcut_target_state(6)))


def test_landscape_gamma_periodicity():
    a = landscape_scan(8, (0.0, 1.0), (0.0, math.pi), 10)
    b = landscape_scan(8, (2 * math.pi, 2 * math.pi + 1.0), (0.0, math.pi), 10)
    np.testing.assert_allclose(a.energies, b.energies, atol=1e-10)


def test_landscape_tie_break_lexicographic():
    # p = 1 landscape is symmetric under (gamma, beta) -> (-gamma, -beta) mod periods
    scan = landscape_scan(4, resolution=16)
    ties = np.argwhere(np.isclose(scan.energies, scan.min_energy, atol=0, rtol=0))
    assert scan.argmin == (scan.gammas[ties[0][0]], scan.betas[ties[0][1]])


def test_landscape_rejects_resolution():
    with pytest.raises(ValueError):
        landscape_scan(4, resolution=1)


def test_depth_one_optimum_refines_grid():
    params, energy = depth_one_optimum(6, resolution=40)
    assert energy <= landscape_scan(6, resolution=40).min_energy
    assert energy == pytest.approx(-8.619188, abs=1e-5)


def test_beta_sweep_endpoints():
    sweep = beta_sweep(6, [0.4], (0.0, math.pi), 11)
    assert sweep.squeezing_db[0] == pytest.approx(0, abs=1e-9)
    assert sweep.betas.size == 11
    with pytest.raises(ValueError):
        beta_sweep(6, [0.4, 0.2], (0, 1), 10)
    with pytest.raises(ValueError):
        beta_sweep(6, [0.4], (0, 1), 1)


def test_beta_sweep_multilayer_matches_trial_state():
    sweep = beta_sweep(12, list(THREE_LAYER_GAMMAS), (THREE_LAYER_BETAS[2], THREE_LAYER_BETAS[2] + 1), 2, prior_betas=THREE_LAYER_BETAS[:2])
    s = trial_state(12, QaoaParams(THREE_LAYER_GAMMAS, THREE_LAYER_BETAS))
    assert sweep.squeezing_db[0] == pytest.approx(metrology_report(s).squeezing_db, abs=1e-9)
