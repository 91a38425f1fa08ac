import cmath
import math

import numpy as np
import pytest

from ptbeam.ptqubit import (
    PhaseLabel,
    PTParams,
    ThreeLevelParams,
    effective_coupling,
    eigenvalues,
    h_eff,
    propagator,
    rho_t,
)


def random_params(rng):
    return PTParams(
        omega=float(rng.uniform(-2, 3)),
        phi=float(rng.uniform(0, 2 * math.pi)),
        gamma=float(rng.uniform(0, 2)),
    )


def test_effective_coupling_values():
    assert effective_coupling(ThreeLevelParams(1, 1, 1, 1, 1, 0.0)) == pytest.approx(1.0)
    assert effective_coupling(ThreeLevelParams(2, 2, 2, 2, 3, 0.0)) == pytest.approx(1.5)
    assert effective_coupling(ThreeLevelParams(0, 0, 1, 1, 5, 0.0)) == pytest.approx(0.0)


def test_effective_coupling_rejects_asymmetric_systems():
    with pytest.raises(ValueError, match="detunings"):
        effective_coupling(ThreeLevelParams(1, 2, 1, 1, 1, 0.0))
    with pytest.raises(ValueError, match="couplings"):
        effective_coupling(ThreeLevelParams(1, 1, 1, 2, 1, 0.0))
    with pytest.raises(ValueError, match="nonzero"):
        effective_coupling(ThreeLevelParams(1, 1, 0, 0, 1, 0.0))


def test_h_eff_limits():
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    assert np.abs(h_eff(PTParams(0.0, 0.0, 0.0)) - sx).max() < 1e-15

    h = h_eff(PTParams(omega=0.8, phi=1.3, gamma=0.0))
    assert np.abs(h - h.conj().T).max() < 1e-15

    h = h_eff(PTParams(omega=1.0, phi=0.0, gamma=0.5))
    assert np.abs(h - np.diag([0.5j, -0.5j])).max() < 1e-15


def test_eigenvalue_examples():
    e_plus, e_minus = eigenvalues(PTParams(0.0, 0.0, 0.0))  # J = 1
    assert e_plus == pytest.approx(1.0)
    assert e_minus == pytest.approx(-1.0)

    e_plus, e_minus = eigenvalues(PTParams(0.0, 0.0, 1.0))  # exceptional point
    assert abs(e_plus) < 1e-12 and abs(e_minus) < 1e-12

    e_plus, e_minus = eigenvalues(PTParams(0.4, 0.0, 1.0))  # J = 0.6 < gamma
    assert e_plus == pytest.approx(0.8j)
    assert e_minus == pytest.approx(-0.8j)


def test_eigenvalues_are_characteristic_roots():
    rng = np.random.default_rng(21)
    for _ in range(50):
        p = random_params(rng)
        h = h_eff(p)
        for e in eigenvalues(p):
            d = h - e * np.eye(2)
            det = d[0, 0] * d[1, 1] - d[0, 1] * d[1, 0]
            assert abs(det) < 1e-10


def test_phase_classification():
    assert PTParams(2.0, math.pi, 0.5).phase() is PhaseLabel.PTS  # J = 3
    assert PTParams(0.7, 0.0, 1.0).phase() is PhaseLabel.PTSB  # J = 0.3
    assert PTParams(0.0, 0.0, 1.0).phase() is PhaseLabel.EXCEPTIONAL  # J = 1

    rng = np.random.default_rng(22)
    for _ in range(50):
        p = random_params(rng)
        if p.coupling - p.gamma > 1e-9:
            assert p.phase() is PhaseLabel.PTS
            e_plus, _ = eigenvalues(p)
            assert abs(e_plus.imag) < 1e-10
        elif p.gamma - p.coupling > 1e-9:
            assert p.phase() is PhaseLabel.PTSB
            e_plus, _ = eigenvalues(p)
            assert abs(e_plus.real) < 1e-10


def test_propagator_identity_at_t0():
    rng = np.random.default_rng(23)
    for _ in range(10):
        assert np.abs(propagator(random_params(rng), 0.0) - np.eye(2)).max() < 1e-15


def test_propagator_hermitian_limit():
    p = PTParams(0.0, 0.0, 0.0)
    for t in (0.3, 1.0, 2.7):
        u = propagator(p, t)
        expected = np.array(
            [[math.cos(t), -1j * math.sin(t)], [-1j * math.sin(t), math.cos(t)]]
        )
        assert np.abs(u - expected).max() < 1e-12
        assert np.abs(u @ u.conj().T - np.eye(2)).max() < 1e-12


def test_propagator_unitary_for_zero_gain_loss():
    rng = np.random.default_rng(24)
    for _ in range(30):
        p = PTParams(float(rng.uniform(-2, 3)), float(rng.uniform(0, 2 * math.pi)), 0.0)
        t = float(rng.uniform(0, 10))
        u = propagator(p, t)
        assert np.abs(u @ u.conj().T - np.eye(2)).max() < 1e-10


def test_propagator_exceptional_point_limit():
    # at J = gamma = 1 the frequency vanishes: cos -> 1, sin(wt)/w -> t
    p = PTParams(omega=0.0, phi=0.0, gamma=1.0)
    t = 1.3
    u = propagator(p, t)
    expected = np.array([[1 + t, -1j * t], [-1j * t, 1 - t]], dtype=complex)
    assert np.abs(u - expected).max() < 1e-9


def test_propagator_branch_agreement_near_exceptional():
    # series-limit branch vs direct complex evaluation for small |freq|
    gamma = 1.0
    for w in np.logspace(-6, -3, 10):
        for sign in (+1, -1):
            j = math.sqrt(gamma**2 + sign * w**2)
            p = PTParams(omega=1 - j, phi=0.0, gamma=gamma)
            assert abs(abs(p.freq) - w) < 1e-9
            for t in (0.5, 1.7, 3.0):
                direct = propagator(p, t, series_threshold=0.0)
                series = propagator(p, t, series_threshold=math.inf)
                assert np.abs(direct - series).max() < 1e-8


def test_propagator_solves_schrodinger_equation():
    # finite-difference check of i dU/dt = H U
    rng = np.random.default_rng(25)
    h = 1e-6
    for _ in range(10):
        p = random_params(rng)
        t = float(rng.uniform(0.1, 3))
        du = (propagator(p, t + h) - propagator(p, t - h)) / (2 * h)
        rhs = -1j * h_eff(p) @ propagator(p, t)
        assert np.abs(du - rhs).max() < 1e-6


def test_propagator_rejects_negative_time():
    with pytest.raises(ValueError):
        propagator(PTParams(0.0, 0.0, 0.0), -0.1)


def test_rho_t_initial_state():
    p = PTParams(2.0, math.pi, 0.5)
    assert np.abs(rho_t(p, 0.0) - np.diag([1.0, 0.0])).max() < 1e-15


def test_rho_t_half_period_swap():
    # gamma = 0, J = 1: population fully transfers at t = pi/2
    p = PTParams(0.0, 0.0, 0.0)
    rho = rho_t(p, math.pi / 2)
    assert np.abs(rho - np.diag([0.0, 1.0])).max() < 1e-12


def test_rho_t_always_valid_pure_state():
    rng = np.random.default_rng(26)
    for _ in range(100):
        p = random_params(rng)
        t = float(rng.uniform(0, 10))
        rho = rho_t(p, t)
        assert abs(np.trace(rho) - 1) < 1e-10
        assert np.abs(rho - rho.conj().T).max() < 1e-10
        assert np.linalg.eigvalsh(rho).min() > -1e-10
        assert np.abs(rho @ rho - rho).max() < 1e-9


def test_rho_t_custom_initial_ket():
    p = PTParams(0.0, 0.0, 0.0)
    plus = np.array([1.0, 1.0]) / math.sqrt(2)
    rho = rho_t(p, 0.0, initial=plus)
    assert np.abs(rho - np.full((2, 2), 0.5)).max() < 1e-12


def test_rho_t_rejects_vanishing_norm():
    with pytest.raises(ValueError, match="norm"):
        rho_t(PTParams(0.0, 0.0, 0.0), 1.0, initial=np.zeros(2))


def test_freq_branches():
    assert PTParams(2.0, math.pi, 0.5).freq == pytest.approx(cmath.sqrt(9 - 0.25))
    ptsb = PTParams(0.7, 0.0, 1.0).freq
    assert abs(ptsb.real) < 1e-12 and ptsb.imag > 0
