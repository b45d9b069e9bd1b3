"""Quadrature engines shared by the distribution and pairing modules.

Gaussian rules come from the Golub-Welsch eigenproblem of the Jacobi
three-term recurrence, solved with a symmetric tridiagonal eigensolver.
Line integrals are composite Gauss-Legendre with a panel-doubling error
estimate; periodic integrals use the uniform trapezoid sum, which is
spectrally accurate for smooth periodic integrands.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

__all__ = [
    "IntegrationError",
    "RuleConstructionError",
    "QuadratureRule",
    "gauss_legendre",
    "gauss_hermite",
    "panel_nodes",
    "integrate_panels",
    "integrate_periodic",
    "radon_line_integral",
]


class IntegrationError(ArithmeticError):
    """Quadrature refinement disagreed beyond the requested tolerance."""

    def __init__(self, message: str, value: float, estimate: float):
        super().__init__(f"{message} (value={value!r}, estimate={estimate!r})")
        self.value = value
        self.estimate = estimate


class RuleConstructionError(RuntimeError):
    """The eigensolver behind a Gaussian rule failed to converge."""


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Nodes and weights tagged with the domain they integrate over."""

    nodes: np.ndarray
    weights: np.ndarray
    domain: str  # "finite-panel" | "gaussian-line" | "periodic-circle"


def _golub_welsch(diag, offdiag, first_moment):
    try:
        values, vectors = eigh_tridiagonal(diag, offdiag)
    except np.linalg.LinAlgError as exc:
        raise RuleConstructionError("tridiagonal eigensolver did not converge") from exc
    return values, first_moment * vectors[0, :] ** 2


def gauss_legendre(order: int) -> QuadratureRule:
    """Gauss-Legendre rule on [-1, 1], exact for polynomials of degree <= 2*order - 1."""
    if order < 1:
        raise ValueError(f"quadrature order must be >= 1, got {order}")
    if order == 1:
        return QuadratureRule(np.zeros(1), np.full(1, 2.0), "finite-panel")
    k = np.arange(1.0, order)
    nodes, weights = _golub_welsch(np.zeros(order), k / np.sqrt(4.0 * k * k - 1.0), 2.0)
    return QuadratureRule(nodes, weights, "finite-panel")


def gauss_hermite(order: int) -> QuadratureRule:
    """Rule for integrals of f(x) exp(-x^2) over the whole line.

    The weights sum to sqrt(pi); nodes are the zeros of the physicists'
    Hermite polynomial of the given order.
    """
    if order < 1:
        raise ValueError(f"quadrature order must be >= 1, got {order}")
    if order == 1:
        return QuadratureRule(np.zeros(1), np.full(1, math.sqrt(math.pi)), "gaussian-line")
    k = np.arange(1.0, order)
    nodes, weights = _golub_welsch(np.zeros(order), np.sqrt(k / 2.0), math.sqrt(math.pi))
    return QuadratureRule(nodes, weights, "gaussian-line")


def panel_nodes(a: float, b: float, panels: int, order: int):
    """Composite Gauss-Legendre nodes and weights covering [a, b] with equal panels."""
    if panels < 1:
        raise ValueError(f"need at least one panel, got {panels}")
    base = gauss_legendre(order)
    edges = np.linspace(a, b, panels + 1)
    centers = 0.5 * (edges[:-1] + edges[1:])
    half_widths = 0.5 * np.diff(edges)
    nodes = (centers[:, None] + half_widths[:, None] * base.nodes).ravel()
    weights = (half_widths[:, None] * base.weights).ravel()
    return nodes, weights


def _evaluate(f, x: np.ndarray) -> np.ndarray:
    try:
        values = np.asarray(f(x), dtype=float)
        if values.shape == x.shape:
            return values
    except (TypeError, ValueError):
        pass
    # scalar-only callable: fall back to a per-node loop
    return np.fromiter((float(f(t)) for t in x), dtype=float, count=len(x))


def integrate_panels(f, a: float, b: float, panels: int = 8, order: int = 16,
                     tol: float | None = None):
    """Integrate a callable on [a, b] by composite Gauss-Legendre.

    Returns (value, estimate) where the estimate is the absolute difference
    against the same rule with the panel count doubled.  When ``tol`` is
    given and the estimate exceeds it, IntegrationError is raised carrying
    both numbers.
    """
    if not b > a:
        raise ValueError(f"need b > a, got [{a}, {b}]")
    x_coarse, w_coarse = panel_nodes(a, b, panels, order)
    x_fine, w_fine = panel_nodes(a, b, 2 * panels, order)
    coarse = float(_evaluate(f, x_coarse) @ w_coarse)
    value = float(_evaluate(f, x_fine) @ w_fine)
    estimate = abs(value - coarse)
    if tol is not None and estimate > tol:
        raise IntegrationError("panel-doubling disagreement", value, estimate)
    return value, estimate


def integrate_periodic(f, period: float, points: int = 256) -> float:
    """Uniform trapezoid sum of f over one period."""
    if points < 4:
        raise ValueError(f"need at least 4 points, got {points}")
    step = period / points
    x = np.arange(points) * step
    return float(np.sum(_evaluate(f, x)) * step)


def radon_line_integral(phase_space_fn, x_quad: float, phi: float, half_width: float,
                        panels: int = 12, order: int = 12, tol: float | None = None) -> float:
    """Integral of a phase-space function along one rotated quadrature line.

    The line X = q cos(phi) + p sin(phi) is parametrized as
    q = X cos(phi) - t sin(phi), p = X sin(phi) + t cos(phi) and the
    function is integrated over t in [-half_width, half_width].  The
    callable must accept equal-shape numpy arrays.
    """
    if half_width <= 0:
        raise ValueError(f"half_width must be positive, got {half_width}")
    cos_phi, sin_phi = math.cos(phi), math.sin(phi)

    def along_line(t):
        return phase_space_fn(x_quad * cos_phi - t * sin_phi,
                              x_quad * sin_phi + t * cos_phi)

    value, _ = integrate_panels(along_line, -half_width, half_width, panels, order, tol=tol)
    return value
