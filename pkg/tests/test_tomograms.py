import math
import os

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planetomo.fock import StateSpec
from planetomo.quadrature import radon_line_integral
from planetomo.states import WignerEvaluator, eval_fock, hermite
from planetomo.tomograms import AxisSpec, optical, planar, sample_grid, symplectic


def coherent_optical_exact(alpha, x, phi):
    center = math.sqrt(2) * (alpha.real * np.cos(phi) + alpha.imag * np.sin(phi))
    return np.exp(-((x - center) ** 2)) / math.sqrt(math.pi)


def test_optical_vacuum_is_phi_independent_gaussian():
    state = StateSpec.fock(0)
    x = np.linspace(-4, 4, 17)
    for phi in (0.0, 0.9, 2.4, 5.1):
        np.testing.assert_allclose(optical(state, x, phi),
                                   np.exp(-x * x) / math.sqrt(math.pi), rtol=0, atol=1e-14)


def test_optical_coherent_closed_form():
    alpha = 1 - 0.7j
    state = StateSpec.coherent(alpha)
    x = np.linspace(-5, 5, 21)[:, None]
    phi = np.linspace(0, 2 * math.pi, 16, endpoint=False)[None, :]
    np.testing.assert_allclose(optical(state, x, phi), coherent_optical_exact(alpha, x, phi),
                               rtol=0, atol=1e-12)


def test_optical_fock_closed_form():
    # e^{-X^2} H_n(X)^2 / (2^n n! sqrt(pi)), independent of phi
    x = np.linspace(-4, 4, 15)
    for n in (1, 2, 3):
        expected = np.exp(-x * x) * hermite(n, x) ** 2 / (2**n * math.factorial(n) * math.sqrt(math.pi))
        np.testing.assert_allclose(optical(StateSpec.fock(n), x, 1.1), expected, rtol=0, atol=1e-13)


def test_optical_equals_squared_fock_sum():
    state = StateSpec.superposition([1, 1j], dim=8)
    x, phi = 0.6, 1.3
    amplitude = sum(state.coefficients[n] * np.exp(-1j * n * phi) * eval_fock(n, x)
                    for n in range(8))
    assert abs(optical(state, x, phi) - abs(amplitude) ** 2) < 1e-14


def test_optical_radon_consistency_single_lines():
    state = StateSpec.fock(2)
    evaluator = WignerEvaluator(state)
    half_width = state.radial_cutoff()
    for x_val, phi_val in ((0.0, 0.0), (1.2, 0.8), (-0.7, 2.9)):
        direct = optical(state, x_val, phi_val)
        via_radon = radon_line_integral(evaluator, x_val, phi_val, half_width)
        assert abs(direct - via_radon) < 1e-6


def test_symplectic_coherent_closed_form():
    alpha = -0.5 + 2j
    state = StateSpec.coherent(alpha)
    for x_val in (-2.0, 0.0, 1.5):
        for mu, nu in ((1.0, 0.0), (0.4, -1.1), (-2.0, 0.3)):
            scale_sq = mu * mu + nu * nu
            center = math.sqrt(2) * (alpha.real * mu + alpha.imag * nu)
            exact = math.exp(-((x_val - center) ** 2) / scale_sq) / math.sqrt(math.pi * scale_sq)
            assert abs(symplectic(state, x_val, mu, nu) - exact) < 1e-12


def test_symplectic_vacuum_at_zero():
    for mu, nu in ((0.5, 0.5), (2.0, -1.0)):
        exact = 1 / math.sqrt(math.pi * (mu * mu + nu * nu))
        assert abs(symplectic(StateSpec.fock(0), 0.0, mu, nu) - exact) < 1e-13


def test_symplectic_homogeneity_fixed_factors():
    state = StateSpec.coherent(1 + 1j)
    for lam in (-2.0, 0.5, 3.0):
        value = symplectic(state, lam * 0.8, lam * 0.6, lam * -0.9) * abs(lam)
        assert abs(value - symplectic(state, 0.8, 0.6, -0.9)) < 1e-12


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=-3, max_value=3).filter(lambda v: abs(v) > 1e-3))
def test_symplectic_homogeneity_property(lam):
    state = StateSpec.fock(1)
    value = symplectic(state, lam * 0.4, lam * 1.1, lam * 0.25) * abs(lam)
    assert abs(value - symplectic(state, 0.4, 1.1, 0.25)) < 1e-10


def test_symplectic_degenerate_direction():
    with pytest.raises(ValueError):
        symplectic(StateSpec.fock(0), 1.0, 0.0, 0.0)


def test_planar_vacuum_closed_form():
    state = StateSpec.fock(0)
    for x, y in ((1.0, 0.0), (0.3, -1.2), (2.0, 2.0)):
        exact = math.exp(-(x * x + y * y)) / math.sqrt(math.pi * (x * x + y * y))
        assert abs(planar(state, x, y) - exact) < 1e-14


def test_planar_coherent_closed_form():
    alpha = 1 + 1j
    state = StateSpec.coherent(alpha)
    x = np.linspace(-3, 3, 10)[:, None]
    y = np.linspace(-3, 3, 10)[None, :]
    r_sq = x * x + y * y
    shift = math.sqrt(2) * (alpha.real * x + alpha.imag * y)
    exact = np.exp(-((r_sq - shift) ** 2) / r_sq) / np.sqrt(math.pi * r_sq)
    np.testing.assert_allclose(planar(state, x, y), exact, rtol=0, atol=1e-12)


def test_planar_first_excited_at_unit_radius():
    # (1/(2 n!)) H_1(1)^2 e^{-1} / sqrt(pi) at r = 1
    expected = 4 * math.exp(-1) / (2 * math.sqrt(math.pi))
    assert abs(planar(StateSpec.fock(1), 1.0, 0.0) - expected) < 1e-10
    assert abs(planar(StateSpec.fock(1), 0.0, 1.0) - expected) < 1e-10


def test_planar_rejects_origin():
    with pytest.raises(ValueError):
        planar(StateSpec.fock(0), 0.0, 0.0)


def test_axis_spec_validation():
    with pytest.raises(ValueError):
        AxisSpec(0.0, 1.0, 0)
    with pytest.raises(ValueError):
        AxisSpec(1.0, 1.0, 5)
    axis = AxisSpec(0.0, 2 * math.pi, 8, periodic=True)
    values = axis.values()
    assert len(values) == 8
    assert values[-1] < 2 * math.pi


def test_sample_grid_planar_positivity_and_origin_offset():
    axis = AxisSpec(-5.0, 5.0, 200)
    grid = sample_grid(StateSpec.fock(0), "planar", axis, axis)
    assert np.all(grid.values >= 0)
    assert np.all(np.isfinite(grid.values))
    assert grid.origin_offset is None  # 200 points over [-5, 5] never hit the origin

    odd_axis = AxisSpec(-5.0, 5.0, 101)
    grid = sample_grid(StateSpec.fock(0), "planar", odd_axis, odd_axis)
    assert grid.origin_offset is not None
    i, j, x_off, y_off = grid.origin_offset
    assert (i, j) == (50, 50)
    assert x_off == pytest.approx(0.05)
    exact = math.exp(-(x_off**2 + y_off**2)) / math.sqrt(math.pi * (x_off**2 + y_off**2))
    assert abs(grid.values[i, j] - exact) < 1e-12


def test_sample_grid_optical_riemann_normalization():
    axis_x = AxisSpec(-6.0, 6.0, 241)
    axis_phi = AxisSpec(0.0, 2 * math.pi, 16, periodic=True)
    grid = sample_grid(StateSpec.fock(0), "optical", axis_x, axis_phi)
    sums = grid.values.sum(axis=0) * axis_x.step
    np.testing.assert_allclose(sums, 1.0, rtol=0, atol=1e-6)


def test_sample_grid_wigner_matches_pointwise():
    state = StateSpec.fock(1)
    axis = AxisSpec(-2.0, 2.0, 9)
    grid = sample_grid(state, "wigner", axis, axis)
    evaluator = WignerEvaluator(state)
    values = axis.values()
    direct = evaluator(values[:, None], values[None, :])
    np.testing.assert_allclose(grid.values, direct, rtol=0, atol=1e-14)


def test_sample_grid_symmetry_relation():
    # w(-X, phi) = w(X, phi + pi) pointwise
    state = StateSpec.coherent(-0.5 + 2j)
    x = np.linspace(-6, 6, 32)[:, None]
    phi = (np.arange(32) * (2 * math.pi / 32))[None, :]
    assert float(np.max(np.abs(optical(state, -x, phi) - optical(state, x, phi + math.pi)))) < 1e-12


def test_sample_grid_deterministic_and_thread_invariant():
    state = StateSpec.coherent(1 + 0.5j)
    axis = AxisSpec(-3.0, 3.0, 40)
    first = sample_grid(state, "planar", axis, axis)
    second = sample_grid(state, "planar", axis, axis)
    assert np.array_equal(first.values, second.values)
    threaded = sample_grid(state, "planar", axis, axis, num_threads=4)
    assert np.array_equal(first.values, threaded.values)


def test_sample_grid_env_thread_cap(monkeypatch):
    monkeypatch.setenv("TOMO_NUM_THREADS", "3")
    axis = AxisSpec(-2.0, 2.0, 11)
    grid = sample_grid(StateSpec.fock(0), "planar", axis, axis)
    reference = sample_grid(StateSpec.fock(0), "planar", axis, axis, num_threads=1)
    assert np.array_equal(grid.values, reference.values)


def test_sample_grid_unknown_representation():
    axis = AxisSpec(-1.0, 1.0, 5)
    with pytest.raises(ValueError):
        sample_grid(StateSpec.fock(0), "husimi", axis, axis)


def test_grid_rows_order_and_offset_coordinates():
    axis = AxisSpec(-1.0, 1.0, 3)
    grid = sample_grid(StateSpec.fock(0), "planar", axis, axis)
    rows = list(grid.rows())
    assert len(rows) == 9
    assert rows[0][:2] == (-1.0, -1.0)
    assert rows[-1][:2] == (1.0, 1.0)
    center = rows[4]
    assert center[:2] == (0.5, 0.5)  # origin node exported half a cell away
