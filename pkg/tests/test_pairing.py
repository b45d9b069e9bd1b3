import math
from dataclasses import replace

import numpy as np
import pytest

from planetomo.fock import DEFAULT_DIM, StateSpec, expectation_trace, symmetric_word_sum
from planetomo.pairing import (CalibrationError, PairingConfig, PlanePairer, calibrate_kappa,
                               expect_optical, expect_planar, expect_trace, expectation_report,
                               observable_matrix, pair_optical, pair_planar)
from planetomo.quadrature import IntegrationError
from planetomo.symbols import (ObservableExpr, SymbolPolynomial, biorthogonal_symbols,
                               circle_restriction, observable_symbol)

EIGHT_STATES = ([StateSpec.fock(n) for n in range(5)]
                + [StateSpec.coherent(1 + 0j), StateSpec.coherent(1 + 1j),
                   StateSpec.superposition([1, 1], dim=DEFAULT_DIM)])


def test_pair_planar_vacuum_position_squared():
    state = StateSpec.fock(0)
    symbol = biorthogonal_symbols(2)[0]
    assert abs(pair_planar(symbol, state) - 0.5) < 1e-8
    raw = pair_planar(symbol, state, PairingConfig(kappa=1.0))
    assert abs(raw - 0.25) < 1e-8


def test_pair_planar_number_series():
    number = ObservableExpr.number()
    for n in range(6):
        value = pair_planar(number, StateSpec.fock(n))
        tol = 1e-8 if n == 0 else 1e-6
        assert abs(value - n) < tol


def test_pair_planar_cross_word_coherent():
    # trace oracle: <qp + pq> = 4 Re(alpha) Im(alpha) for a coherent state
    state = StateSpec.coherent(1 + 1j)
    reference = expectation_trace(state, symmetric_word_sum(1, 1, state.dim))
    assert abs(reference - 4.0) < 1e-10
    assert abs(pair_planar(biorthogonal_symbols(2)[1], state) - reference) < 1e-6


def test_pair_optical_examples():
    vacuum = StateSpec.fock(0)
    h20 = circle_restriction(biorthogonal_symbols(2)[0])
    assert abs(pair_optical(2, h20, vacuum) - 0.5) < 1e-8

    coherent = StateSpec.coherent(1 + 1j)
    h11 = circle_restriction(biorthogonal_symbols(2)[1])
    assert abs(pair_optical(2, h11, coherent) - 4.0) < 1e-6

    real_coherent = StateSpec.coherent(1 + 0j)
    reference = expectation_trace(real_coherent, symmetric_word_sum(2, 1, real_coherent.dim))
    h21 = circle_restriction(biorthogonal_symbols(3)[1])
    assert abs(pair_optical(3, h21, real_coherent) - reference) < 1e-6


def test_pair_optical_rejects_negative_degree():
    with pytest.raises(ValueError):
        pair_optical(-1, lambda phi: np.ones_like(phi), StateSpec.fock(0))


@pytest.mark.parametrize("m,n", [(m, t - m) for t in range(5) for m in range(t + 1)])
def test_oracle_equivalence_over_state_set(m, n):
    symbol = biorthogonal_symbols(m + n)[n]
    angular = circle_restriction(symbol)
    for state in EIGHT_STATES:
        reference = expectation_trace(state, symmetric_word_sum(m, n, state.dim))
        pairer = PlanePairer(state)
        assert abs(pairer.pair_planar(symbol) - reference) < 1e-6
        assert abs(pairer.pair_optical(m + n, angular) - reference) < 1e-6


def test_pairing_linearity():
    pairer = PlanePairer(StateSpec.coherent(1 + 1j))
    a = biorthogonal_symbols(2)[0]
    b = biorthogonal_symbols(2)[2]
    combined = pairer.pair_planar(0.3 * a + (-2.0) * b)
    separate = 0.3 * pairer.pair_planar(a) - 2.0 * pairer.pair_planar(b)
    assert abs(combined - separate) < 1e-10


def test_half_line_identity():
    # polar half-line pairing is exactly half of the full-line pairing
    raw = PlanePairer(StateSpec.coherent(1 + 1j), PairingConfig(kappa=1.0))
    for m, n in ((2, 0), (1, 1), (2, 1), (3, 0)):
        symbol = biorthogonal_symbols(m + n)[n]
        half = raw.pair_planar(symbol)
        full = raw.pair_optical(m + n, circle_restriction(symbol))
        assert abs(half - 0.5 * full) < 1e-10


def test_calibrate_kappa_full_set():
    states = [StateSpec.fock(n) for n in range(4)]
    states += [StateSpec.coherent(1 + 0j), StateSpec.coherent(1 + 1j)]
    degrees = [(m, t - m) for t in (2, 3, 4) for m in range(t + 1)]
    kappa, spread = calibrate_kappa(states, degrees)
    assert abs(kappa - 2.0) < 1e-6
    assert spread < 1e-6


def test_calibrate_kappa_single_pair():
    kappa, spread = calibrate_kappa([StateSpec.fock(0)], [(2, 0)])
    assert abs(kappa - 2.0) < 1e-10
    assert spread < 1e-12


def test_calibrate_kappa_degenerate():
    # odd-degree words have vanishing averages in any fock state
    with pytest.raises(CalibrationError):
        calibrate_kappa([StateSpec.fock(0), StateSpec.fock(1)], [(1, 0), (0, 1), (2, 1)])


def test_expectation_report_number_on_fock_two():
    report = expectation_report(StateSpec.fock(2), ObservableExpr.number())
    for value in (report.value_planar, report.value_optical, report.value_trace):
        assert abs(value - 2.0) < 1e-6
    assert report.deviation_planar < 1e-6
    assert report.deviation_optical < 1e-6
    assert report.state == "fock:2"


def test_expectation_report_vacuum_odd_word():
    report = expectation_report(StateSpec.coherent(0.0), ObservableExpr.word(1, 0))
    for value in (report.value_planar, report.value_optical, report.value_trace):
        assert abs(value) < 1e-8
    assert math.isfinite(report.relative_planar)
    assert math.isfinite(report.relative_optical)


def test_expectation_report_coherent_position_squared():
    # <q^2> = 2 Re(alpha)^2 + 1/2 for real alpha; trace, plane and line agree
    report = expectation_report(StateSpec.coherent(1 + 0j), ObservableExpr.word(2, 0))
    assert abs(report.value_trace - 2.5) < 1e-10
    assert abs(report.value_planar - report.value_trace) < 1e-6
    assert abs(report.value_optical - report.value_trace) < 1e-6


def test_literal_half_plane_convention():
    # kappa = 1 returns exactly half of the trace expectation
    state = StateSpec.coherent(1 + 1j)
    observable = ObservableExpr.word(1, 1)
    half = expect_planar(observable, state, PairingConfig(kappa=1.0))
    full = expect_trace(observable, state)
    assert abs(full - 4.0) < 1e-10
    assert abs(half - 2.0) < 1e-6


def test_expect_optical_includes_identity_part():
    state = StateSpec.fock(3)
    observable = ObservableExpr.from_terms({(2, 0): 0.5, (0, 2): 0.5}, const=-0.5)
    assert abs(expect_optical(observable, state) - 3.0) < 1e-6


def test_observable_matrix_matches_manual_sum():
    dim = 32
    expr = ObservableExpr.from_terms({(2, 0): 0.5, (0, 2): 0.5}, const=-0.5)
    manual = 0.5 * symmetric_word_sum(2, 0, dim) + 0.5 * symmetric_word_sum(0, 2, dim)
    manual -= 0.5 * np.eye(dim)
    np.testing.assert_allclose(observable_matrix(expr, dim), manual, atol=1e-13)


def test_pairing_config_validation():
    with pytest.raises(ValueError):
        PairingConfig(kappa=0.0)
    with pytest.raises(ValueError):
        PairingConfig(radial_cutoff=2.0)
    with pytest.raises(ValueError):
        PairingConfig(phi_points=2)
    with pytest.raises(ValueError):
        PairingConfig(radial_panels=0)


def test_pairing_integration_guard():
    # starved radial rule must trip the panel-doubling check, not silently pass
    config = PairingConfig(radial_panels=1, radial_order=2, tol=1e-10)
    with pytest.raises(IntegrationError):
        pair_planar(biorthogonal_symbols(4)[2], StateSpec.coherent(1 + 1j), config)


def test_pair_planar_accepts_expr_and_symbol():
    state = StateSpec.fock(1)
    via_expr = pair_planar(ObservableExpr.word(2, 0), state)
    via_symbol = pair_planar(observable_symbol(ObservableExpr.word(2, 0)), state)
    assert abs(via_expr - via_symbol) < 1e-12


def test_constant_symbol_pairs_to_plane_mass():
    # raw polar pairing of the constant 1 gives pi (plane mass of the distribution)
    raw = PlanePairer(StateSpec.coherent(-0.5 + 2j), PairingConfig(kappa=1.0))
    assert abs(raw.pair_planar(SymbolPolynomial({(0, 0): 1.0})) - math.pi) < 1e-8
