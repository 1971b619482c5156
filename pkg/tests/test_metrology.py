import json
import math

import pytest

from squeezeqaoa.metrology import (
    MetrologyReport,
    gaussian_depth_estimate,
    metrology_report,
    qfi_entanglement_depth,
    qfi_pure,
    separable_fisher_bound,
    squeezing_db,
    witness_e1,
)
from squeezeqaoa.qaoa import QaoaParams, trial_state
from squeezeqaoa.spin import coherent_plus_state, dicke_state

from conftest import THREE_LAYER_BETAS, THREE_LAYER_GAMMAS


def test_squeezing_values():
    assert squeezing_db(3, 12) == 0
    assert squeezing_db(0.3207, 12) == pytest.approx(-9.71, abs=0.01)
    assert squeezing_db(0.25, 4) == pytest.approx(10 * math.log10(0.25), abs=1e-12)
    assert squeezing_db(0.0, 4) == -math.inf
    with pytest.raises(ValueError):
        squeezing_db(-0.1, 4)


def test_qfi_examples():
    assert qfi_pure(coherent_plus_state(9), "y") == pytest.approx(9)
    assert qfi_pure(dicke_state(12, 6), "y") == pytest.approx(84)
    with pytest.raises(ValueError):
        qfi_pure(coherent_plus_state(3), "w")


def test_e1_examples():
    assert witness_e1(dicke_state(8, 4)) == (True, 2.0)
    entangled, margin = witness_e1(coherent_plus_state(8))
    assert not entangled and margin == pytest.approx(0, abs=1e-12)


def test_separable_bounds_table():
    # n = 12: k -> s k^2 + r^2
    assert [separable_fisher_bound(k, 12) for k in (1, 2, 5, 8, 9, 11)] == [12, 24, 54, 80, 90, 122]


def test_depth_examples():
    assert qfi_entanglement_depth(84.48, 12) == 9
    assert qfi_entanglement_depth(7, 7) == 1
    assert qfi_entanglement_depth(49, 7) == 7
    assert qfi_entanglement_depth(0, 5) == 1


def test_gaussian_depth_examples():
    assert gaussian_depth_estimate(-9.71, 12) == 11
    assert gaussian_depth_estimate(0.0, 6) == 1
    assert [gaussian_depth_estimate(s, n) for s, n in ((-4.80, 4), (-4.18, 6), (-4.02, 8))] == [4, 3, 3]
    assert gaussian_depth_estimate(-math.inf, 6) == 6


def test_report_dicke_and_coherent():
    r = metrology_report(dicke_state(12, 6))
    assert r.squeezing_db == -math.inf and r.e1_entangled and r.dicke_overlap == 1
    r = metrology_report(coherent_plus_state(12))
    assert r.squeezing_db == pytest.approx(0, abs=1e-9)
    assert r.e2_depth == 1
    assert r.dicke_overlap == pytest.approx(924 / 4096)


def test_report_three_layer_state():
    r = metrology_report(trial_state(12, QaoaParams(THREE_LAYER_GAMMAS, THREE_LAYER_BETAS)))
    assert r.squeezing_db == pytest.approx(-9.71, abs=0.05)
    assert r.exp_z2 == pytest.approx(0.32, abs=0.01)
    assert r.qfi_y == pytest.approx(84.48, abs=0.2)
    assert (r.e2_depth, r.e3_depth_estimate) == (9, 11)
    assert r.squeezing_db == pytest.approx(10 * math.log10(r.var_z / 3), abs=1e-9)


def test_report_json_round_trip():
    for state in (dicke_state(6, 3), trial_state(5, QaoaParams((0.3,), (1.2,)))):
        r = metrology_report(state)
        text = r.to_json()
        assert "Infinity" not in text
        assert MetrologyReport.from_dict(json.loads(text)) == r
