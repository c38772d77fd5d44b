import math

import numpy as np
import pytest
from hypothesis import given, settings

from numrad.linalg import operator_norm
from numrad.radius import (
    EnclosureNotReached,
    GRID_CAP,
    RadiusConfig,
    herm_envelope,
    numerical_radius,
    radius_refine,
    radius_sample_oracle,
    radius_sweep,
)

from conftest import random_complex, square_matrices

J = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)

# loose but still certified; keeps property runs quick
FAST = RadiusConfig(grid_points=64, target_width_rel=1e-7)


def shift_matrix(n):
    return np.diag(np.ones(n - 1), 1).astype(complex)


def test_config_validation():
    with pytest.raises(ValueError):
        RadiusConfig(grid_points=7)
    with pytest.raises(ValueError):
        RadiusConfig(target_width=0.0)
    with pytest.raises(ValueError):
        RadiusConfig(target_width_rel=-1e-9)
    with pytest.raises(ValueError):
        RadiusConfig(max_refinement_iters=-1)
    with pytest.raises(ValueError):
        RadiusConfig(oracle_samples=-5)


def test_herm_envelope_definition(rng):
    a = random_complex(rng, 5)
    theta = 0.7
    h = herm_envelope(a, theta)
    want = 0.5 * (np.exp(1j * theta) * a + np.exp(-1j * theta) * a.conj().T)
    assert np.linalg.norm(h - want) < 1e-14 * np.linalg.norm(want)
    assert np.linalg.norm(h - h.conj().T) == 0.0
    # angle zero picks out the Hermitian part of a
    b = 0.5 * (a + a.conj().T)
    assert np.linalg.norm(herm_envelope(a, 0.0) - b) < 1e-14 * np.linalg.norm(b)


def test_herm_envelope_special_angles():
    # Hermitian input at a quarter turn cancels up to phase rounding
    h = np.array([[2.0, 1.0], [1.0, -1.0]], dtype=complex)
    assert np.linalg.norm(herm_envelope(h, math.pi / 2)) <= 1e-15 * np.linalg.norm(h)
    env = herm_envelope(J, 0.0)
    assert np.allclose(env, np.array([[0.0, 0.5], [0.5, 0.0]]), atol=1e-15)


def test_sweep_jordan():
    est = radius_sweep(J, RadiusConfig(grid_points=1024))
    # grid maximum of (1/2)cos ripple sits just under 1/2
    assert 0.5 - 1e-5 <= est.lower <= 0.5 + 1e-12
    assert est.upper >= 0.5
    assert est.upper - est.lower <= math.pi / 1024
    assert est.grid_points == 1024
    assert est.refinement_iters == 0
    assert 0.0 <= est.theta_star < 2 * math.pi
    w = est.witness
    assert np.linalg.norm(w) == pytest.approx(1.0, abs=1e-12)
    # witness attains the sweep value on its envelope angle
    h = 0.5 * (np.exp(1j * est.theta_star) * J + np.exp(-1j * est.theta_star) * J.conj().T)
    assert np.real(w.conj() @ h @ w) == pytest.approx(est.lower, abs=1e-12)


@pytest.mark.parametrize("start_grid", [8, 16])
def test_refine_monotone(start_grid):
    cfg = RadiusConfig(grid_points=start_grid)
    est = radius_sweep(J, cfg)
    ref = radius_refine(J, est, cfg)
    assert ref.lower >= est.lower
    assert ref.upper == est.upper
    assert ref.refinement_iters >= 1
    # refined lower lands on the true radius
    assert ref.lower == pytest.approx(0.5, abs=1e-12)
    assert abs(np.vdot(ref.witness, J @ ref.witness)) == pytest.approx(ref.lower, abs=1e-12)


def test_oracle_bounds_radius():
    val = radius_sample_oracle(J, 100000, seed=1)
    assert 0.49 <= val <= 0.5 + 1e-12
    with pytest.raises(ValueError):
        radius_sample_oracle(J, 0)


def test_radius_jordan_default():
    est = numerical_radius(J)
    assert est.lower == pytest.approx(0.5, abs=1e-12)
    assert est.upper - est.lower <= 1e-9
    assert est.upper >= 0.5


def test_radius_identity():
    est = numerical_radius(np.eye(3, dtype=complex))
    assert est.lower == pytest.approx(1.0, abs=1e-12)
    assert est.width <= 1e-9


def test_radius_zero_matrix():
    est = numerical_radius(np.zeros((4, 4), dtype=complex))
    assert est.lower == 0.0
    assert est.upper == 0.0


def test_radius_hermitian_equals_norm(rng):
    g = random_complex(rng, 6)
    h = 0.5 * (g + g.conj().T)
    est = numerical_radius(h)
    assert est.lower == pytest.approx(operator_norm(h), rel=1e-11)


def test_radius_shift_closed_form():
    # w of the n-dimensional nilpotent shift is cos(pi/(n+1))
    for n in (2, 3, 5, 8):
        est = numerical_radius(shift_matrix(n))
        assert est.lower == pytest.approx(math.cos(math.pi / (n + 1)), abs=2e-10)
        assert est.width <= 1e-9


def test_normal_matrix_radius_is_spectral(rng):
    d = rng.standard_normal(5) + 1j * rng.standard_normal(5)
    q, _ = np.linalg.qr(random_complex(rng, 5))
    a = (q * d) @ q.conj().T
    est = numerical_radius(a)
    assert est.lower == pytest.approx(float(np.abs(d).max()), rel=1e-9)


def test_enclosure_not_reached_carries_estimate():
    with pytest.raises(EnclosureNotReached) as info:
        numerical_radius(J, RadiusConfig(target_width=1e-16))
    est = info.value.estimate
    assert est is not None
    assert est.grid_points == GRID_CAP
    assert est.lower == pytest.approx(0.5, abs=1e-12)
    assert est.width > 1e-16


def test_witness_attains_lower(rng):
    for n in (2, 4, 7):
        a = random_complex(rng, n)
        est = numerical_radius(a, FAST)
        got = abs(np.vdot(est.witness, a @ est.witness))
        assert got == pytest.approx(est.lower, abs=1e-12 * max(1.0, est.lower))


def test_determinism(rng):
    a = random_complex(rng, 5)
    cfg = RadiusConfig(grid_points=256, oracle_samples=500, seed=11)
    e1 = numerical_radius(a, cfg)
    e2 = numerical_radius(a, cfg)
    assert (e1.lower, e1.upper, e1.theta_star) == (e2.lower, e2.upper, e2.theta_star)
    assert np.array_equal(e1.witness, e2.witness)


@settings(deadline=None, max_examples=25)
@given(square_matrices(max_dim=4))
def test_enclosure_soundness(a):
    nrm = operator_norm(a)
    est = numerical_radius(a, FAST)
    tol = 1e-9 * max(1.0, nrm)
    # norm sandwich
    assert est.upper >= 0.5 * nrm - tol
    assert est.lower <= nrm + tol
    # enclosure is ordered and meets its target
    assert est.lower <= est.upper
    assert est.width <= 1e-7 * max(1.0, nrm) + 1e-15


@settings(deadline=None, max_examples=20)
@given(square_matrices(max_dim=4))
def test_oracle_never_beats_upper(a):
    est = numerical_radius(a, FAST)
    val = radius_sample_oracle(a, 2000, seed=3)
    assert val <= est.upper + 1e-9 * max(1.0, est.upper)


@settings(deadline=None, max_examples=20)
@given(square_matrices(max_dim=4))
def test_scale_and_adjoint_invariance(a):
    est = numerical_radius(a, FAST)
    tol = 1e-6 * max(1.0, est.upper)
    est_adj = numerical_radius(a.conj().T, FAST)
    assert est_adj.lower == pytest.approx(est.lower, abs=tol)
    c = 0.5 - 1.25j
    est_sc = numerical_radius(c * a, FAST)
    assert est_sc.lower == pytest.approx(abs(c) * est.lower, abs=abs(c) * tol + 1e-12)


def test_unitary_invariance(rng):
    a = random_complex(rng, 6)
    q, r = np.linalg.qr(random_complex(rng, 6))
    u = q * (np.diagonal(r) / np.abs(np.diagonal(r)))
    est = numerical_radius(a, FAST)
    est_rot = numerical_radius(u.conj().T @ a @ u, FAST)
    tol = 1e-6 * max(1.0, est.upper)
    assert est_rot.lower == pytest.approx(est.lower, abs=tol)


def test_power_inequality_spot(rng):
    for n in (2, 3, 5):
        a = random_complex(rng, n)
        base = numerical_radius(a, FAST)
        for p in (2, 3):
            powered = numerical_radius(np.linalg.matrix_power(a, p), FAST)
            tol = 1e-7 * max(1.0, base.upper ** p)
            assert powered.lower <= base.upper ** p + tol


def test_oracle_assist_stays_sound(rng):
    a = random_complex(rng, 6)
    with_oracle = numerical_radius(a, RadiusConfig(oracle_samples=5000, seed=4))
    plain = numerical_radius(a)
    assert with_oracle.lower <= with_oracle.upper
    assert with_oracle.lower == pytest.approx(plain.lower, abs=1e-9 * max(1.0, plain.upper))
