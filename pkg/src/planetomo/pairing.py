"""Observable averages by plane and line integration over tomograms.

The plane pairing is always computed in polar form, where the 1/r
singularity of the plane distribution cancels exactly against the area
element.  The default pairing constant kappa = 2 reproduces trace
expectations; kappa = 1 is the face-value half-plane convention (the
reflection symmetry of the optical tomogram makes the polar half-line
integral exactly half of the full-line one).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .fock import StateSpec, expectation_trace, identity_op, symmetric_word_sum
from .quadrature import IntegrationError, panel_nodes
from .symbols import (ObservableExpr, SymbolPolynomial, biorthogonal_symbols,
                      circle_restriction, identity_symbol, observable_symbol)
from .tomograms import optical

DEFAULT_KAPPA = 2.0


class CalibrationError(ValueError):
    """No (state, observable) pair had a usable nonzero trace expectation."""


@dataclass(frozen=True)
class PairingConfig:
    """Numerical knobs for the pairing integrals.

    kappa scales the polar plane pairing; radial_cutoff of None picks each
    state's own cutoff.  The tolerance gates the radial panel-doubling check.
    """

    kappa: float = DEFAULT_KAPPA
    radial_cutoff: float | None = None
    phi_points: int = 256
    radial_panels: int = 16
    radial_order: int = 16
    tol: float = 1e-8

    def __post_init__(self):
        if not self.kappa > 0:
            raise ValueError(f"kappa must be positive, got {self.kappa}")
        if self.radial_cutoff is not None and self.radial_cutoff < 6.0:
            raise ValueError(f"radial cutoff must be >= 6, got {self.radial_cutoff}")
        if self.phi_points < 4:
            raise ValueError(f"need at least 4 angular points, got {self.phi_points}")
        if self.radial_panels < 1 or self.radial_order < 1:
            raise ValueError("radial panels and order must be >= 1")


class PlanePairer:
    """Caches tomogram grids for one state so that many symbols pair cheaply."""

    def __init__(self, state: StateSpec, config: PairingConfig | None = None):
        self.state = state
        self.config = config if config is not None else PairingConfig()
        cutoff = self.config.radial_cutoff
        self.cutoff = cutoff if cutoff is not None else max(6.0, state.radial_cutoff())
        points = self.config.phi_points
        self.phi = np.arange(points) * (2.0 * math.pi / points)
        self.phi_weight = 2.0 * math.pi / points
        self._half_grids = None  # r in [0, R]
        self._full_grids = None  # X in [-R, R]

    def _grids(self, full: bool):
        cached = self._full_grids if full else self._half_grids
        if cached is None:
            low = -self.cutoff if full else 0.0
            cached = tuple(
                self._tomogram_grid(low, self.cutoff, panels)
                for panels in (self.config.radial_panels, 2 * self.config.radial_panels)
            )
            if full:
                self._full_grids = cached
            else:
                self._half_grids = cached
        return cached

    def _tomogram_grid(self, low, high, panels):
        nodes, weights = panel_nodes(low, high, panels, self.config.radial_order)
        tomogram = optical(self.state, nodes[:, None], self.phi[None, :])
        return nodes, weights, tomogram

    def _pair(self, radial_profile, full: bool) -> float:
        values = []
        for nodes, weights, tomogram in self._grids(full):
            integrand = radial_profile(nodes) * tomogram
            values.append(float(weights @ integrand.sum(axis=1)) * self.phi_weight)
        estimate = abs(values[1] - values[0])
        if estimate > self.config.tol:
            raise IntegrationError("radial panel-doubling disagreement", values[1], estimate)
        return values[1]

    def pair_planar(self, symbol) -> float:
        """kappa-scaled polar pairing over r in [0, R], phi in [0, 2 pi)."""
        poly = observable_symbol(symbol) if isinstance(symbol, ObservableExpr) else symbol
        cos_phi = np.cos(self.phi)
        sin_phi = np.sin(self.phi)

        def radial_profile(nodes):
            return poly(nodes[:, None] * cos_phi, nodes[:, None] * sin_phi)

        return self.config.kappa * self._pair(radial_profile, full=False)

    def pair_optical(self, degree: int, angular) -> float:
        """Full-line pairing of X^degree H(phi) against the optical tomogram.

        With H the circle restriction of the degree-(m+n) dual symbol of
        S(m, n) this returns the symmetric word-sum average directly.
        """
        if degree < 0:
            raise ValueError(f"degree must be >= 0, got {degree}")
        h_values = np.broadcast_to(np.asarray(angular(self.phi), dtype=float), self.phi.shape)

        def radial_profile(nodes):
            return (nodes[:, None] ** degree) * h_values

        return self._pair(radial_profile, full=True)


def pair_planar(symbol, state: StateSpec, config: PairingConfig | None = None) -> float:
    """Average of an observable from the plane distribution (polar form)."""
    return PlanePairer(state, config).pair_planar(symbol)


def pair_optical(degree: int, angular, state: StateSpec,
                 config: PairingConfig | None = None) -> float:
    """Average from the optical tomogram for a homogeneous symbol (degree, H)."""
    return PlanePairer(state, config).pair_optical(degree, angular)


def expect_planar(observable: ObservableExpr, state: StateSpec,
                  config: PairingConfig | None = None) -> float:
    return PlanePairer(state, config).pair_planar(observable)


def expect_optical(observable: ObservableExpr, state: StateSpec,
                   config: PairingConfig | None = None) -> float:
    pairer = PlanePairer(state, config)
    return _optical_value(pairer, observable)


def _optical_value(pairer: PlanePairer, observable: ObservableExpr) -> float:
    total = 0.0
    for (m, n), coeff in observable.terms:
        symbol = biorthogonal_symbols(m + n)[n]
        total += coeff * pairer.pair_optical(m + n, circle_restriction(symbol))
    if observable.const:
        total += observable.const * pairer.pair_optical(0, circle_restriction(identity_symbol()))
    return total


def observable_matrix(expr: ObservableExpr, dim: int) -> np.ndarray:
    """Truncated matrix sum of coeff * S(m, n) plus the identity part."""
    total = np.zeros((dim, dim), dtype=complex)
    for (m, n), coeff in expr.terms:
        total += coeff * symmetric_word_sum(m, n, dim)
    if expr.const:
        total += expr.const * identity_op(dim)
    return total


def expect_trace(observable: ObservableExpr, state: StateSpec) -> float:
    return expectation_trace(state, observable_matrix(observable, state.dim))


def calibrate_kappa(states, degrees, config: PairingConfig | None = None):
    """Median trace / raw-planar ratio over (state, S(m, n)) pairs, with its spread.

    Pairs whose trace expectation is below 1e-6 in magnitude are skipped;
    if none survive the calibration is degenerate.  A handful of pairs of
    mixed parity (four or more) gives a robust estimate.
    """
    base = config if config is not None else PairingConfig()
    raw_config = replace(base, kappa=1.0)
    ratios = []
    for state in states:
        pairer = PlanePairer(state, raw_config)
        for m, n in degrees:
            reference = expectation_trace(state, symmetric_word_sum(m, n, state.dim))
            if abs(reference) < 1e-6:
                continue
            raw = pairer.pair_planar(biorthogonal_symbols(m + n)[n])
            ratios.append(reference / raw)
    if not ratios:
        raise CalibrationError("calibration degenerate: every trace expectation is near zero")
    estimate = float(np.median(ratios))
    spread = float(max(abs(r - estimate) for r in ratios))
    return estimate, spread


@dataclass(frozen=True)
class ExpectationReport:
    """One observable average through all three routes, with deviations."""

    state: str
    observable: str
    value_planar: float
    value_optical: float
    value_trace: float
    deviation_planar: float
    deviation_optical: float
    relative_planar: float
    relative_optical: float


def expectation_report(state: StateSpec, observable: ObservableExpr,
                       config: PairingConfig | None = None) -> ExpectationReport:
    """Plane pairing, line pairing and the trace oracle for one observable."""
    pairer = PlanePairer(state, config)
    value_planar = pairer.pair_planar(observable)
    value_optical = _optical_value(pairer, observable)
    value_trace = expect_trace(observable, state)
    deviation_planar = abs(value_planar - value_trace)
    deviation_optical = abs(value_optical - value_trace)
    scale = max(abs(value_trace), 1.0)  # keeps relative deviations finite near zero
    return ExpectationReport(
        state=state.label,
        observable=observable.label(),
        value_planar=value_planar,
        value_optical=value_optical,
        value_trace=value_trace,
        deviation_planar=deviation_planar,
        deviation_optical=deviation_optical,
        relative_planar=deviation_planar / scale,
        relative_optical=deviation_optical / scale,
    )
