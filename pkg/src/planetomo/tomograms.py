"""Optical, symplectic and planar distributions of a state, plus grid sampling."""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .fock import StateSpec
from .states import PI_QUARTER_INV, WignerEvaluator

REPRESENTATIONS = ("optical", "planar", "wigner")


def optical(state: StateSpec, x_quad, phi):
    """Probability density w(X, phi) of the rotated quadrature q cos(phi) + p sin(phi).

    Computed as |sum_n c_n e^{-i n phi} <X|n>|^2, which equals the Radon
    transform of the state's Wigner function.  Non-negative by construction
    and normalized to 1 in X for every phi.
    """
    x, angle = np.broadcast_arrays(np.asarray(x_quad, dtype=float),
                                   np.asarray(phi, dtype=float))
    coeff = state.coefficients
    top = state.support_order()
    below = PI_QUARTER_INV * np.exp(-0.5 * x * x)
    amplitude = coeff[0] * below.astype(complex)
    if top >= 1:
        step_phase = np.exp(-1j * angle)
        phase = step_phase
        current = math.sqrt(2.0) * x * below
        amplitude = amplitude + coeff[1] * phase * current
        for k in range(2, top + 1):
            below, current = current, math.sqrt(2.0 / k) * x * current - math.sqrt((k - 1.0) / k) * below
            phase = phase * step_phase
            amplitude = amplitude + coeff[k] * phase * current
    density = np.real(amplitude) ** 2 + np.imag(amplitude) ** 2
    return density if getattr(density, "ndim", 0) else float(density)


def symplectic(state: StateSpec, x_quad, mu, nu):
    """Density of mu q + nu p at value X; homogeneous of degree -1 in (X, mu, nu)."""
    mu_arr = np.asarray(mu, dtype=float)
    nu_arr = np.asarray(nu, dtype=float)
    scale = np.hypot(mu_arr, nu_arr)
    if np.any(scale == 0.0):
        raise ValueError("degenerate direction: (mu, nu) must not be (0, 0)")
    result = optical(state, np.asarray(x_quad, dtype=float) / scale,
                     np.arctan2(nu_arr, mu_arr)) / scale
    return result if getattr(result, "ndim", 0) else float(result)


def planar(state: StateSpec, x, y):
    """Plane distribution: the symplectic tomogram evaluated at (x^2 + y^2, x, y).

    Equals w(r, theta) / r in polar coordinates, non-negative away from the
    origin, with an integrable 1/r singularity at the origin where the value
    is left undefined.  Integrates to pi over the plane.
    """
    x_arr = np.asarray(x, dtype=float)
    y_arr = np.asarray(y, dtype=float)
    radius = np.hypot(x_arr, y_arr)
    if np.any(radius == 0.0):
        raise ValueError("degenerate point: the plane distribution is undefined at the origin")
    result = optical(state, radius, np.arctan2(y_arr, x_arr)) / radius
    return result if getattr(result, "ndim", 0) else float(result)


@dataclass(frozen=True)
class AxisSpec:
    """Uniform sampling axis; periodic axes exclude the right endpoint."""

    start: float
    stop: float
    count: int
    periodic: bool = False

    def __post_init__(self):
        if self.count < 1:
            raise ValueError(f"invalid grid: axis needs count >= 1, got {self.count}")
        if not self.stop > self.start:
            raise ValueError(f"invalid grid: need stop > start, got [{self.start}, {self.stop}]")

    def values(self) -> np.ndarray:
        if self.periodic:
            return self.start + np.arange(self.count) * (self.stop - self.start) / self.count
        if self.count == 1:
            return np.array([self.start])
        return np.linspace(self.start, self.stop, self.count)

    @property
    def step(self) -> float:
        if self.periodic:
            return (self.stop - self.start) / self.count
        if self.count == 1:
            return 0.0
        return (self.stop - self.start) / (self.count - 1)


@dataclass
class TomogramGrid:
    """Dense samples of one representation with axis metadata for export."""

    axis1: AxisSpec
    axis2: AxisSpec
    values: np.ndarray
    representation: str
    state_label: str
    origin_offset: tuple[int, int, float, float] | None = None  # planar grids only

    def rows(self):
        """(axis1, axis2, value) triples in deterministic row-major order."""
        values_1 = self.axis1.values()
        values_2 = self.axis2.values()
        for i in range(self.axis1.count):
            for j in range(self.axis2.count):
                a, b = values_1[i], values_2[j]
                if self.origin_offset is not None and (i, j) == self.origin_offset[:2]:
                    a, b = self.origin_offset[2], self.origin_offset[3]
                yield float(a), float(b), float(self.values[i, j])


def _thread_count(num_threads: int | None) -> int:
    if num_threads is not None:
        return max(1, int(num_threads))
    raw = os.environ.get("TOMO_NUM_THREADS", "").strip()
    return max(1, int(raw)) if raw else 1


def sample_grid(state: StateSpec, representation: str, axis1: AxisSpec, axis2: AxisSpec,
                num_threads: int | None = None) -> TomogramGrid:
    """Evaluate one representation on the product grid axis1 x axis2.

    "optical" grids are (X, phi); "planar" and "wigner" grids are (x, y).
    Planar grids never hit the exact origin: a node coinciding with it (up
    to axis roundoff) is evaluated half a cell away along both axes and
    exported with those shifted coordinates.  Output placement is
    deterministic for any thread count (TOMO_NUM_THREADS caps workers).
    """
    if representation not in REPRESENTATIONS:
        raise ValueError(f"unknown representation {representation!r}; want one of {REPRESENTATIONS}")
    grid1, grid2 = np.meshgrid(axis1.values(), axis2.values(), indexing="ij")
    origin_offset = None

    if representation == "optical":
        def evaluate(block1, block2):
            return optical(state, block1, block2)
    elif representation == "planar":
        grid1 = grid1.copy()
        grid2 = grid2.copy()
        near = 1e-9 * max(axis1.step, axis2.step, 1e-6)
        for i, j in np.argwhere(np.hypot(grid1, grid2) <= near):
            shift1 = 0.5 * axis1.step if axis1.step > 0 else 0.5
            shift2 = 0.5 * axis2.step if axis2.step > 0 else 0.5
            grid1[i, j] = shift1
            grid2[i, j] = shift2
            origin_offset = (int(i), int(j), float(shift1), float(shift2))

        def evaluate(block1, block2):
            return planar(state, block1, block2)
    else:
        evaluate = WignerEvaluator(state)

    threads = _thread_count(num_threads)
    if representation == "wigner":
        # bound the (cells x chord-nodes) work arrays per block
        chord_nodes = len(evaluate._rule[0])
        rows_per_block = max(1, (1 << 20) // max(1, axis2.count * chord_nodes))
    else:
        rows_per_block = axis1.count if threads == 1 else math.ceil(axis1.count / threads)
    blocks = [np.arange(start, min(start + rows_per_block, axis1.count))
              for start in range(0, axis1.count, rows_per_block)]

    def run_block(rows):
        return np.atleast_2d(evaluate(grid1[rows], grid2[rows]))

    if threads > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(run_block, blocks))
    else:
        parts = [run_block(rows) for rows in blocks]
    values = np.vstack(parts).astype(float)

    if not np.all(np.isfinite(values)):
        raise ValueError("grid evaluation produced non-finite values")
    return TomogramGrid(axis1, axis2, values, representation, state.label, origin_offset)
