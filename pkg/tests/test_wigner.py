import math

import numpy as np
import pytest
from scipy.special import sph_harm_y
from sympy import Rational
from sympy.physics.wigner import clebsch_gordan

from squeezeqaoa.qaoa import QaoaParams, trial_state
from squeezeqaoa.spin import SymmetricState, apply_mixer_rotation, coherent_plus_state, dicke_state
from squeezeqaoa.wigner import spin_wigner, wigner_at

from conftest import THREE_LAYER_BETAS, THREE_LAYER_GAMMAS


def multipole_wigner(state, theta, phi):
    """Direct sum over multipoles rho_kq Y_kq, rescaled to the package normalisation."""
    n = state.n
    j = Rational(n, 2)
    rho = np.outer(state.amps, state.amps.conj())
    mvals = [Rational(2 * i - n, 2) for i in range(n + 1)]
    total = 0j
    for k in range(n + 1):
        for q in range(-k, k + 1):
            # T_kq = sqrt((2k+1)/(2j+1)) sum <j m; k q | j m'> |m'><m|
            t = np.zeros((n + 1, n + 1))
            for a, m in enumerate(mvals):
                for b, mp in enumerate(mvals):
                    if mp == m + q:
                        t[b, a] = float(clebsch_gordan(j, k, j, m, q, mp))
            t *= math.sqrt((2 * k + 1) / (n + 1))
            rho_kq = np.trace(rho @ t.conj().T)
            total += rho_kq * sph_harm_y(k, q, theta, phi)
    return (math.sqrt(4 * math.pi / (n + 1)) * total).real


@pytest.mark.parametrize("n", [1, 2, 3])
def test_matches_multipole_expansion(n):
    rng = np.random.default_rng(n)
    a = rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1)
    s = SymmetricState(n, a / np.linalg.norm(a))
    for theta, phi in [(0.3, 1.1), (1.7, -2.0), (2.9, 0.4), (0.0, 0.0)]:
        assert wigner_at(s, theta, phi) == pytest.approx(multipole_wigner(s, theta, phi), abs=1e-12)


def test_single_qubit_pole():
    up = dicke_state(1, 1)                  # |0>, L_z = +1/2
    assert wigner_at(up, 0.0, 0.0) == pytest.approx((1 + math.sqrt(3)) / 2)
    assert wigner_at(up, math.pi, 0.0) == pytest.approx((1 - math.sqrt(3)) / 2)
    g = spin_wigner(up, 16)
    assert g.argmax()[0] == g.thetas.min()


def test_coherent_peaks_on_plus_x():
    c = coherent_plus_state(6)
    grid = spin_wigner(c, (33, 32))
    theta, phi = grid.argmax()
    assert theta == pytest.approx(math.pi / 2, abs=0.1) and phi == 0.0
    assert wigner_at(c, math.pi / 2, 0.0) > grid.values.max() - 1e-12


@pytest.mark.parametrize("state", [coherent_plus_state(12), dicke_state(12, 6), dicke_state(5, 1)])
def test_normalization(state):
    assert spin_wigner(state, 32).normalization() == pytest.approx(1, abs=1e-6)


def test_maximally_mixed_is_uniform():
    # average of W over an orthonormal basis equals the mixed-state value 1/(2l+1)
    n = 4
    pts = (0.7, 2.3)
    mean = np.mean([wigner_at(dicke_state(n, k), *pts) for k in range(n + 1)])
    assert mean == pytest.approx(1 / (n + 1))


def test_negativity():
    assert spin_wigner(dicke_state(12, 6), 40).min() < 0
    squeezed = trial_state(12, QaoaParams(THREE_LAYER_GAMMAS, THREE_LAYER_BETAS))
    assert spin_wigner(squeezed, 40).min() < 0


def _rot_x(angle):
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[1, 0, 0], [0, c, -s], [0, s, c]])


def _to_angles(v):
    return math.acos(max(-1.0, min(1.0, v[2]))), math.atan2(v[1], v[0])


def test_mixer_rotates_distribution():
    # exp(2i beta L_x) is a rotation by -2 beta about x
    s = trial_state(6, QaoaParams((0.4,), (0.2,)))
    beta = 0.35
    r = apply_mixer_rotation(s, beta)
    for theta, phi in [(0.5, 0.0), (1.2, 2.0), (2.5, -1.0)]:
        v = np.array([math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)])
        back = _to_angles(_rot_x(2 * beta) @ v)
        assert wigner_at(r, theta, phi) == pytest.approx(wigner_at(s, *back), abs=1e-10)


def test_csv_layout():
    text = spin_wigner(dicke_state(2, 1), 8).to_csv().splitlines()
    assert text[0] == "theta,phi,value"
    assert len(text) == 1 + 64


def test_resolution_floor():
    with pytest.raises(ValueError):
        spin_wigner(dicke_state(2, 1), 4)
