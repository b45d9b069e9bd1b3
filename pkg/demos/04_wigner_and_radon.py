"""The Wigner function and its Radon transform against the direct tomogram.

The optical tomogram is computed two independent ways: directly as a phased
Fock sum, and as a line integral of the Wigner function across phase space.
Run with --plot to drop PNG heatmaps next to this script (needs matplotlib).
"""

import math
import sys

import numpy as np

from planetomo import StateSpec, WignerEvaluator, optical, radon_line_integral, sample_grid
from planetomo.tomograms import AxisSpec

state = StateSpec.superposition([1, 0, 1], dim=64)  # (|0> + |2>)/sqrt(2)
print(f"state: {state.label}")

# --- Wigner negativity: a genuinely non-classical region
evaluator = WignerEvaluator(state)
grid = np.linspace(-3, 3, 25)
table = evaluator(grid[:, None], grid[None, :])
print(f"Wigner range on [-3, 3]^2: min = {table.min():+.6f}, max = {table.max():+.6f}")
print(f"value at the origin: {evaluator(0.0, 0.0):+.6f}")

# --- Radon transform of W vs the direct tomogram
print("\nRadon transform of W vs direct tomogram:")
print(f"{'X':>6} {'phi':>6} {'radon':>20} {'direct':>20}")
half_width = state.radial_cutoff()
for x in (0.0, 0.8, 1.6):
    for phi in (0.0, math.pi / 4, math.pi / 2):
        via_radon = radon_line_integral(evaluator, x, phi, half_width)
        direct = optical(state, x, phi)
        print(f"{x:6.2f} {phi:6.2f} {via_radon:20.12f} {direct:20.12f}")

# --- marginal: integrating W over p recovers the position density
from planetomo import integrate_panels, wavefunction

print("\nposition marginal of W vs |psi(q)|^2:")
for q in (-1.0, 0.0, 1.0):
    marginal, _ = integrate_panels(lambda p: evaluator(np.full_like(p, q), p),
                                   -half_width, half_width, panels=10, order=12)
    density = float(abs(wavefunction(state, q)) ** 2)
    print(f"  q = {q:+.1f}: marginal = {marginal:.12f}, |psi|^2 = {density:.12f}")

if "--plot" in sys.argv[1:]:
    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("\nmatplotlib not available; skipping plots")
    else:
        axis = AxisSpec(-4.0, 4.0, 161)
        for representation in ("wigner", "planar"):
            sampled = sample_grid(state, representation, axis, axis)
            fig, ax = plt.subplots(figsize=(5, 4))
            mesh = ax.pcolormesh(axis.values(), axis.values(), sampled.values.T,
                                 shading="auto", cmap="RdBu_r")
            fig.colorbar(mesh, ax=ax)
            ax.set_title(f"{representation} of {state.label}")
            out = f"demo04_{representation}.png"
            fig.savefig(out, dpi=120)
            print(f"wrote {out}")
