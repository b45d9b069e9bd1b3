"""Coordinate-representation wavefunctions and the Wigner function.

Every evaluation is a direct finite Fock sum; no grid interpolation happens
anywhere, so wavefunction values carry only floating-point rounding error.
"""

from __future__ import annotations

import math

import numpy as np

from .fock import StateSpec
from .quadrature import IntegrationError, panel_nodes

PI_QUARTER_INV = math.pi ** -0.25


def hermite(n: int, x):
    """Physicists' Hermite polynomial H_n via the three-term recurrence.

    Values overflow to inf for n or |x| far outside the working range;
    normalized quantities should go through eval_fock, which recurs on the
    normalized wavefunctions instead.
    """
    if n < 0:
        raise ValueError(f"order must be >= 0, got {n}")
    x = np.asarray(x, dtype=float)
    previous = np.ones_like(x)
    if n == 0:
        return previous
    current = 2.0 * x
    for k in range(1, n):
        previous, current = current, 2.0 * x * current - 2.0 * k * previous
    return current


def eval_fock(n: int, x):
    """<X|n> = pi^(-1/4) (2^n n!)^(-1/2) H_n(X) exp(-X^2/2)."""
    if n < 0:
        raise ValueError(f"level must be >= 0, got {n}")
    x = np.asarray(x, dtype=float)
    below = PI_QUARTER_INV * np.exp(-0.5 * x * x)
    if n == 0:
        return below
    current = math.sqrt(2.0) * x * below
    for k in range(2, n + 1):
        below, current = current, math.sqrt(2.0 / k) * x * current - math.sqrt((k - 1.0) / k) * below
    return current


def eval_coherent(alpha, x):
    """<X|alpha> = pi^(-1/4) exp(-X^2/2 + sqrt(2) alpha X - alpha^2/2 - |alpha|^2/2)."""
    alpha = complex(alpha)
    x = np.asarray(x, dtype=float)
    exponent = (-0.5 * x * x + math.sqrt(2.0) * alpha * x
                - 0.5 * alpha * alpha - 0.5 * abs(alpha) ** 2)
    return PI_QUARTER_INV * np.exp(exponent)


def wavefunction(state: StateSpec, x):
    """Finite Fock sum of the state's coordinate wavefunction."""
    x = np.asarray(x, dtype=float)
    coeff = state.coefficients
    top = state.support_order()
    below = PI_QUARTER_INV * np.exp(-0.5 * x * x)
    total = coeff[0] * below.astype(complex)
    if top == 0:
        return total
    current = math.sqrt(2.0) * x * below
    total = total + coeff[1] * current
    for k in range(2, top + 1):
        below, current = current, math.sqrt(2.0 / k) * x * current - math.sqrt((k - 1.0) / k) * below
        total = total + coeff[k] * current
    return total


class WignerEvaluator:
    """Wigner function of a state via Gauss-Legendre quadrature in the chord variable.

    The chord integral is truncated to |u| <= 2 * radial_cutoff, where the
    integrand of every supported state has decayed far below rounding.  The
    integrand oscillates at frequency |p|, so the default rule is sized for
    |p| up to the state's radial cutoff; with ``tol`` set, each evaluation is
    recomputed on a panel-halved rule and a disagreement above tol raises
    IntegrationError.
    """

    def __init__(self, state: StateSpec, panels: int = 20, order: int = 20,
                 tol: float | None = None):
        self.state = state
        self.tol = tol
        half_width = 2.0 * state.radial_cutoff()
        self._rule = panel_nodes(-half_width, half_width, panels, order)
        self._check_rule = None
        if tol is not None:
            self._check_rule = panel_nodes(-half_width, half_width, max(1, panels // 2), order)

    def complex_integral(self, q, p, rule=None):
        """Raw chord quadrature before taking the real part (imaginary part is a diagnostic)."""
        nodes, weights = rule if rule is not None else self._rule
        q_b, p_b = np.broadcast_arrays(np.asarray(q, dtype=float), np.asarray(p, dtype=float))
        left = wavefunction(self.state, q_b[..., None] + 0.5 * nodes)
        right = wavefunction(self.state, q_b[..., None] - 0.5 * nodes)
        phase = np.exp(-1j * p_b[..., None] * nodes)
        return (left * np.conj(right) * phase) @ weights / (2.0 * math.pi)

    def __call__(self, q, p):
        value = self.complex_integral(q, p)
        if self.tol is not None:
            check = self.complex_integral(q, p, rule=self._check_rule)
            deviation = float(np.max(np.abs(value - check)))
            if deviation > self.tol:
                raise IntegrationError("chord quadrature did not converge",
                                       float(np.max(np.real(value))), deviation)
        result = np.real(value)
        return result if getattr(result, "ndim", 0) else float(result)


def wigner(state: StateSpec, q, p, panels: int = 20, order: int = 20):
    """Wigner function value(s); negative regions are expected for excited states."""
    return WignerEvaluator(state, panels=panels, order=order)(q, p)
