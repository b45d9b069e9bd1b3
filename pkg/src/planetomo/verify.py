"""Named self-check suites behind the `verify` subcommand.

Each check reduces to one worst-case deviation compared against a default
tolerance.  Operator-identity deviations are scaled by the magnitude of the
operator entries (word-sum entries reach ~1e4 at the default truncation, so
an unscaled 1e-12 would demand sub-epsilon rounding).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .fock import (DEFAULT_DIM, StateSpec, annihilation_op, expectation_trace, identity_op,
                   interior, momentum_op, number_op, paper_symmetrization, position_op,
                   symmetric_word_sum)
from .pairing import PairingConfig, PlanePairer, calibrate_kappa
from .quadrature import integrate_panels, integrate_periodic, panel_nodes
from .states import WignerEvaluator, hermite, wavefunction
from .symbols import (ObservableExpr, SymbolPolynomial, biorthogonal_symbols,
                      circle_restriction, gram_matrix, identity_symbol, observable_symbol,
                      weighted_inner)
from .tomograms import optical, planar, symplectic

COHERENT_SET = (0j, 1 + 0j, 1 + 1j, -0.5 + 2j)

GRAM_DEGREE_TWO = (math.pi / 4.0) * np.array([[3.0, 0.0, 1.0],
                                              [0.0, 1.0, 0.0],
                                              [1.0, 0.0, 3.0]])
GRAM_DEGREE_THREE = (math.pi / 8.0) * np.array([[5.0, 0.0, 1.0, 0.0],
                                                [0.0, 1.0, 0.0, 1.0],
                                                [1.0, 0.0, 1.0, 0.0],
                                                [0.0, 1.0, 0.0, 5.0]])


def symbol_fixtures():
    """Closed-form dual-symbol coefficient tables for degrees 1 to 3."""
    pi = math.pi
    return {
        1: [{(1, 0): 1 / pi}, {(0, 1): 1 / pi}],
        2: [{(2, 0): 3 / (2 * pi), (0, 2): -1 / (2 * pi)},
            {(1, 1): 4 / pi},
            {(2, 0): -1 / (2 * pi), (0, 2): 3 / (2 * pi)}],
        3: [{(3, 0): 2 / pi, (1, 2): -2 / pi},
            {(2, 1): 10 / pi, (0, 3): -2 / pi},
            {(3, 0): -2 / pi, (1, 2): 10 / pi},
            {(2, 1): -2 / pi, (0, 3): 2 / pi}],
    }


@dataclass(frozen=True)
class Check:
    name: str
    deviation: float
    tolerance: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance


def coherent_optical_exact(alpha: complex, x_quad, phi):
    """Gaussian quadrature density of a coherent state along the rotated axis."""
    center = math.sqrt(2.0) * (alpha.real * np.cos(phi) + alpha.imag * np.sin(phi))
    return np.exp(-((x_quad - center) ** 2)) / math.sqrt(math.pi)


def coherent_symplectic_exact(alpha: complex, x_quad, mu, nu):
    scale_sq = mu * mu + nu * nu
    center = math.sqrt(2.0) * (alpha.real * mu + alpha.imag * nu)
    return np.exp(-((x_quad - center) ** 2) / scale_sq) / np.sqrt(math.pi * scale_sq)


def coherent_planar_exact(alpha: complex, x, y):
    r_sq = x * x + y * y
    shift = math.sqrt(2.0) * (alpha.real * x + alpha.imag * y)
    return np.exp(-((r_sq - shift) ** 2) / r_sq) / np.sqrt(math.pi * r_sq)


def fock_optical_exact(n: int, x_quad):
    """Quadrature density of |n>; the Hermite argument is the quadrature value itself."""
    return (hermite(n, x_quad) ** 2 * np.exp(-np.asarray(x_quad, dtype=float) ** 2)
            / (2.0 ** n * math.factorial(n) * math.sqrt(math.pi)))


def fock_planar_exact(n: int, x, y):
    radius = np.hypot(x, y)
    return fock_optical_exact(n, radius) / radius


def _scaled_block_dev(left: np.ndarray, right: np.ndarray, margin: int) -> float:
    """Max interior-entry deviation scaled by the operator magnitude."""
    block_left = interior(left, margin)
    block_right = interior(right, margin)
    scale = max(1.0, float(np.max(np.abs(block_right))))
    return float(np.max(np.abs(block_left - block_right))) / scale


def pairing_state_set():
    """The eight-state test set used by the oracle-equivalence sweep."""
    states = [StateSpec.fock(n) for n in range(5)]
    states.append(StateSpec.coherent(1 + 0j))
    states.append(StateSpec.coherent(1 + 1j))
    states.append(StateSpec.superposition([1, 1], dim=DEFAULT_DIM, label="super:1,1"))
    return states


def degrees_up_to(total_max: int):
    return [(m, total - m) for total in range(total_max + 1) for m in range(total, -1, -1)]


def suite_oracle():
    checks = []
    dim = DEFAULT_DIM
    ladder = annihilation_op(dim)
    commutator = ladder @ ladder.conj().T - ladder.conj().T @ ladder
    checks.append(Check("ladder-commutator",
                        _scaled_block_dev(commutator, identity_op(dim), 2), 1e-12))

    q = position_op(dim)
    p = momentum_op(dim)
    checks.append(Check("canonical-commutator",
                        _scaled_block_dev(q @ p - p @ q, 1j * identity_op(dim), 2), 1e-12))
    checks.append(Check("number-identity",
                        _scaled_block_dev((q @ q + p @ p - identity_op(dim)) / 2.0,
                                          number_op(dim), 2), 1e-12))

    worst_hermitian = 0.0
    worst_ordering = 0.0
    for m, n in degrees_up_to(5):
        total = m + n
        word = symmetric_word_sum(m, n, dim)
        paper = paper_symmetrization(m, n, dim)
        for op in (word, paper):
            worst_hermitian = max(worst_hermitian,
                                  _scaled_block_dev(op, op.conj().T, total))
        scale = 2.0 ** n / math.comb(total, n) if total else 1.0
        worst_ordering = max(worst_ordering,
                             _scaled_block_dev(paper, scale * word, total))
    checks.append(Check("word-sum-hermiticity", worst_hermitian, 1e-12))
    checks.append(Check("ordering-identity", worst_ordering, 1e-12))

    quad_sum = symmetric_word_sum(2, 0, dim) + symmetric_word_sum(0, 2, dim)
    worst = max(abs(expectation_trace(StateSpec.fock(n), quad_sum) - (2 * n + 1))
                for n in range(6))
    checks.append(Check("quadrature-moments", worst, 1e-8))
    return checks


def suite_symbols():
    checks = []
    deviation = max(float(np.max(np.abs(gram_matrix(2) - GRAM_DEGREE_TWO))),
                    float(np.max(np.abs(gram_matrix(3) - GRAM_DEGREE_THREE))))
    checks.append(Check("gram-fixtures", deviation, 1e-12))

    worst = 0.0
    for degree, table in symbol_fixtures().items():
        solved = biorthogonal_symbols(degree)
        for poly, expected in zip(solved, table):
            for key in set(poly.coeffs) | set(expected):
                worst = max(worst, abs(poly.coeffs.get(key, 0.0) - expected.get(key, 0.0)))
    checks.append(Check("symbol-fixtures", worst, 1e-12))

    worst = 0.0
    for degree in range(9):
        for k, poly in enumerate(biorthogonal_symbols(degree)):
            for s in range(degree + 1):
                monomial = SymbolPolynomial({(degree - s, s): 1.0})
                value = weighted_inner(poly, monomial, degree)
                worst = max(worst, abs(value - (1.0 if k == s else 0.0)))
    checks.append(Check("weighted-biorthogonality", worst, 1e-12))

    worst = 0.0
    for degree in range(7):
        for k, poly in enumerate(biorthogonal_symbols(degree)):
            restriction = circle_restriction(poly)
            for s in range(degree + 1):
                value = integrate_periodic(
                    lambda phi, s=s: np.cos(phi) ** (degree - s) * np.sin(phi) ** s * restriction(phi),
                    2.0 * math.pi, 512)
                worst = max(worst, abs(value - (1.0 if k == s else 0.0)))
    checks.append(Check("circle-biorthogonality", worst, 1e-10))

    structural = 0.0
    for degree in range(9):
        for k, poly in enumerate(biorthogonal_symbols(degree)):
            if not poly.is_homogeneous or (poly.coeffs and poly.degree != degree):
                structural = 1.0
            if any((j - k) % 2 for _, j in poly.coeffs):
                structural = 1.0
    checks.append(Check("parity-checkerboard", structural, 1e-12))

    assembled = observable_symbol(ObservableExpr.number())
    expected = {(2, 0): 1 / (2 * math.pi), (0, 2): 1 / (2 * math.pi),
                (0, 0): -1 / (4 * math.pi)}
    deviation = max(abs(assembled.coeffs.get(key, 0.0) - value)
                    for key, value in expected.items())
    extras = [abs(value) for key, value in assembled.coeffs.items() if key not in expected]
    deviation = max([deviation] + extras)
    checks.append(Check("number-symbol", deviation, 1e-12))
    return checks


def suite_tomography():
    checks = []
    coherent_states = {alpha: StateSpec.coherent(alpha) for alpha in COHERENT_SET}
    x_grid = np.linspace(-6.0, 6.0, 20)
    phi_grid = np.arange(20) * (2.0 * math.pi / 20)

    worst = 0.0
    for alpha, state in coherent_states.items():
        computed = optical(state, x_grid[:, None], phi_grid[None, :])
        exact = coherent_optical_exact(alpha, x_grid[:, None], phi_grid[None, :])
        worst = max(worst, float(np.max(np.abs(computed - exact))))
    checks.append(Check("optical-closed-form", worst, 1e-10))

    radii = np.tile([0.5, 1.0, 1.5, 2.0], 5)
    angles = np.arange(20) * (2.0 * math.pi / 20)
    mu = radii * np.cos(angles)
    nu = radii * np.sin(angles)
    worst = 0.0
    for alpha, state in coherent_states.items():
        computed = symplectic(state, x_grid[:, None], mu[None, :], nu[None, :])
        exact = coherent_symplectic_exact(alpha, x_grid[:, None], mu[None, :], nu[None, :])
        worst = max(worst, float(np.max(np.abs(computed - exact))))
    checks.append(Check("symplectic-closed-form", worst, 1e-10))

    xy = np.linspace(-3.0, 3.0, 20)  # even count: no node at the origin
    mesh_x, mesh_y = np.meshgrid(xy, xy, indexing="ij")
    worst = 0.0
    for alpha, state in coherent_states.items():
        computed = planar(state, mesh_x, mesh_y)
        exact = coherent_planar_exact(alpha, mesh_x, mesh_y)
        worst = max(worst, float(np.max(np.abs(computed - exact))))
    checks.append(Check("planar-closed-form", worst, 1e-10))

    worst = 0.0
    for n in (1, 2, 3):
        state = StateSpec.fock(n)
        dev_w = np.max(np.abs(optical(state, x_grid[:, None], phi_grid[None, :])
                              - fock_optical_exact(n, x_grid)[:, None]))
        dev_p = np.max(np.abs(planar(state, mesh_x, mesh_y) - fock_planar_exact(n, mesh_x, mesh_y)))
        worst = max(worst, float(dev_w), float(dev_p))
    checks.append(Check("fock-closed-form", worst, 1e-10))

    state = StateSpec.coherent(1 + 1j)
    worst = 0.0
    for lam in (-2.0, 0.5, 3.0):
        for x_val, mu_val, nu_val in ((0.7, 0.9, -0.4), (-1.2, 0.3, 1.1), (2.0, -1.0, 0.5)):
            scaled = symplectic(state, lam * x_val, lam * mu_val, lam * nu_val) * abs(lam)
            worst = max(worst, abs(scaled - symplectic(state, x_val, mu_val, nu_val)))
    checks.append(Check("symplectic-homogeneity", worst, 1e-12))

    norm_states = [StateSpec.fock(n) for n in range(6)] + list(coherent_states.values())
    worst_full = worst_slice = worst_planar = 0.0
    for state in norm_states:
        pairer = PlanePairer(state)
        raw = PlanePairer(state, PairingConfig(kappa=1.0))
        worst_full = max(worst_full, abs(
            pairer.pair_optical(0, circle_restriction(identity_symbol())) - 1.0))
        worst_planar = max(worst_planar, abs(
            raw.pair_planar(SymbolPolynomial({(0, 0): 1.0})) / math.pi - 1.0))
        cutoff = state.radial_cutoff()
        for phi_val in np.arange(16) * (math.pi / 8.0):
            value, _ = integrate_panels(lambda t: optical(state, t, phi_val),
                                        -cutoff, cutoff, panels=12, order=12)
            worst_slice = max(worst_slice, abs(value - 1.0))
    checks.append(Check("optical-normalization", worst_full, 1e-8))
    checks.append(Check("per-angle-normalization", worst_slice, 1e-8))
    checks.append(Check("planar-normalization", worst_planar, 1e-8))

    x_sym = np.linspace(-6.0, 6.0, 32)[:, None]
    phi_sym = (np.arange(32) * (2.0 * math.pi / 32))[None, :]
    worst = 0.0
    for state in norm_states:
        worst = max(worst, float(np.max(np.abs(
            optical(state, -x_sym, phi_sym) - optical(state, x_sym, phi_sym + math.pi)))))
    checks.append(Check("reflection-symmetry", worst, 1e-12))

    radon_states = [StateSpec.fock(n) for n in range(4)] + [StateSpec.coherent(1 + 0.5j)]
    x_line = np.linspace(-4.0, 4.0, 12)
    worst = 0.0
    for state in radon_states:
        evaluator = WignerEvaluator(state)
        half_width = state.radial_cutoff()
        nodes, weights = panel_nodes(-half_width, half_width, 12, 12)
        for phi_val in np.arange(8) * (math.pi / 4.0):
            direct = optical(state, x_line, phi_val)
            cos_phi, sin_phi = math.cos(phi_val), math.sin(phi_val)
            table = evaluator(x_line[:, None] * cos_phi - nodes[None, :] * sin_phi,
                              x_line[:, None] * sin_phi + nodes[None, :] * cos_phi)
            worst = max(worst, float(np.max(np.abs(direct - table @ weights))))
    checks.append(Check("radon-consistency", worst, 1e-6))

    worst = 0.0
    for state in (StateSpec.fock(1), StateSpec.coherent(1 + 0.5j)):
        evaluator = WignerEvaluator(state)
        cutoff = state.radial_cutoff()
        for q_val in np.linspace(-2.0, 2.0, 7):
            value, _ = integrate_panels(lambda p: evaluator(np.full_like(p, q_val), p),
                                        -cutoff, cutoff, panels=10, order=12)
            target = abs(wavefunction(state, q_val)) ** 2
            worst = max(worst, abs(value - float(target)))
    checks.append(Check("wigner-position-marginal", worst, 1e-6))

    worst = 0.0
    for state in (StateSpec.fock(0), StateSpec.fock(2), StateSpec.coherent(1 + 0.5j)):
        evaluator = WignerEvaluator(state)
        cutoff = state.radial_cutoff()
        nodes, weights = panel_nodes(-cutoff, cutoff, 10, 10)
        table = evaluator(nodes[:, None], nodes[None, :])
        worst = max(worst, abs(float(weights @ table @ weights) - 1.0))
    checks.append(Check("wigner-normalization", worst, 1e-6))
    return checks


def suite_pairing():
    checks = []
    config = PairingConfig()
    worst = 0.0
    for state in pairing_state_set():
        pairer = PlanePairer(state, config)
        for m, n in degrees_up_to(4):
            reference = expectation_trace(state, symmetric_word_sum(m, n, state.dim))
            symbol = biorthogonal_symbols(m + n)[n]
            dev_planar = abs(pairer.pair_planar(symbol) - reference)
            dev_optical = abs(pairer.pair_optical(m + n, circle_restriction(symbol)) - reference)
            worst = max(worst, dev_planar, dev_optical)
    checks.append(Check("oracle-equivalence", worst, 1e-6))

    state = StateSpec.coherent(1 + 1j)
    pairer = PlanePairer(state, config)
    first = biorthogonal_symbols(2)[0]
    second = biorthogonal_symbols(2)[1]
    combined = 0.75 * first + (-1.5) * second
    deviation = abs(pairer.pair_planar(combined)
                    - (0.75 * pairer.pair_planar(first) - 1.5 * pairer.pair_planar(second)))
    checks.append(Check("pairing-linearity", deviation, 1e-10))

    raw = PlanePairer(state, replace(config, kappa=1.0))
    worst = 0.0
    for m, n in ((2, 0), (1, 1), (2, 1)):
        symbol = biorthogonal_symbols(m + n)[n]
        half = raw.pair_planar(symbol)
        full = raw.pair_optical(m + n, circle_restriction(symbol))
        worst = max(worst, abs(half - 0.5 * full))
    checks.append(Check("half-line-identity", worst, 1e-10))

    calibration_states = [StateSpec.fock(n) for n in range(4)]
    calibration_states += [StateSpec.coherent(1 + 0j), StateSpec.coherent(1 + 1j)]
    calibration_degrees = [(m, total - m) for total in (2, 3, 4) for m in range(total + 1)]
    kappa, spread = calibrate_kappa(calibration_states, calibration_degrees)
    checks.append(Check("kappa-calibration", max(abs(kappa - 2.0), spread), 1e-6,
                        detail=f"kappa={kappa!r} spread={spread!r}"))

    number = ObservableExpr.number()
    worst = 0.0
    for n in range(6):
        value = PlanePairer(StateSpec.fock(n), config).pair_planar(number)
        worst = max(worst, abs(value - n))
    checks.append(Check("number-series", worst, 1e-6))
    return checks


SUITES = {
    "oracle": suite_oracle,
    "symbols": suite_symbols,
    "tomography": suite_tomography,
    "pairing": suite_pairing,
}
SUITE_ORDER = ("oracle", "symbols", "tomography", "pairing")


def run(suite: str = "all", tol: float | None = None):
    """Run one suite (or all), optionally overriding every tolerance.

    Returns (results, passed) where results is a list of (suite, Check)
    pairs in deterministic order.
    """
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; want all or one of {SUITE_ORDER}")
    names = SUITE_ORDER if suite == "all" else (suite,)
    results = []
    for name in names:
        for check in SUITES[name]():
            if tol is not None:
                check = replace(check, tolerance=float(tol))
            results.append((name, check))
    passed = all(check.passed for _, check in results)
    return results, passed
