"""Truncated number-basis operators and pure states: the exact trace oracle.

Operators are plain dense complex numpy matrices with the ladder convention
a[n-1, n] = sqrt(n), and hbar = mass = frequency = 1.  Truncation corrupts
the top rows and columns of every ladder-operator product, so operator
comparisons restrict to the interior block (see `interior`).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

DEFAULT_DIM = 64


def _check_dim(dim: int):
    if dim < 2:
        raise ValueError(f"invalid dimension: need dim >= 2, got {dim}")


def _check_degree(m: int, n: int, dim: int):
    if m < 0 or n < 0:
        raise ValueError(f"powers must be non-negative, got ({m}, {n})")
    if 4 * (m + n) > dim:
        raise ValueError(
            f"degree overflow: m+n = {m + n} needs dim >= {4 * (m + n)}, got {dim}")


def annihilation_op(dim: int) -> np.ndarray:
    """Ladder matrix with a[n-1, n] = sqrt(n)."""
    _check_dim(dim)
    return np.diag(np.sqrt(np.arange(1.0, dim)), 1).astype(complex)


def creation_op(dim: int) -> np.ndarray:
    return annihilation_op(dim).conj().T


def position_op(dim: int) -> np.ndarray:
    """q = (a + a^dag) / sqrt(2)."""
    a = annihilation_op(dim)
    return (a + a.conj().T) / math.sqrt(2.0)


def momentum_op(dim: int) -> np.ndarray:
    """p = (a - a^dag) / (i sqrt(2))."""
    a = annihilation_op(dim)
    return (a - a.conj().T) / (1j * math.sqrt(2.0))


def number_op(dim: int) -> np.ndarray:
    """diag(0, 1, ..., dim-1); equals (q^2 + p^2 - 1)/2 on the interior block."""
    _check_dim(dim)
    return np.diag(np.arange(dim, dtype=float)).astype(complex)


def identity_op(dim: int) -> np.ndarray:
    _check_dim(dim)
    return np.eye(dim, dtype=complex)


def symmetric_word_sum(m: int, n: int, dim: int = DEFAULT_DIM) -> np.ndarray:
    """Sum of all C(m+n, n) distinct orderings of m position and n momentum factors.

    S(m, 0) = q^m, S(0, n) = p^n, S(1, 1) = qp + pq.  Built by the recursion
    S(m, n) = q S(m-1, n) + p S(m, n-1), which peels the leading factor.
    """
    _check_dim(dim)
    _check_degree(m, n, dim)
    q = position_op(dim)
    p = momentum_op(dim)
    row = [identity_op(dim)]
    for _ in range(n):
        row.append(p @ row[-1])
    for _ in range(m):
        new_row = [q @ row[0]]
        for j in range(1, n + 1):
            new_row.append(q @ row[j] + p @ new_row[j - 1])
        row = new_row
    return row[n]


def paper_symmetrization(m: int, n: int, dim: int = DEFAULT_DIM) -> np.ndarray:
    """sum over s of C(n, s) p^s q^m p^(n-s).

    Equals (2^n / C(m+n, n)) times symmetric_word_sum(m, n) on the interior
    block; kept as a separate constructor so both orderings stay testable.
    """
    _check_dim(dim)
    _check_degree(m, n, dim)
    q = position_op(dim)
    p = momentum_op(dim)
    q_power = np.linalg.matrix_power(q, m)
    total = np.zeros((dim, dim), dtype=complex)
    for s in range(n + 1):
        left = np.linalg.matrix_power(p, s)
        right = np.linalg.matrix_power(p, n - s)
        total += math.comb(n, s) * (left @ q_power @ right)
    return total


def interior(operator: np.ndarray, margin: int) -> np.ndarray:
    """Leading block unaffected by ladder truncation for degree-`margin` products."""
    size = operator.shape[0] - margin
    return operator[:size, :size]


def format_complex(z: complex) -> str:
    """Canonical a+bi rendering used in state labels."""
    z = complex(z)
    if z.imag == 0.0:
        return repr(z.real)
    if z.real == 0.0:
        return repr(z.imag) + "i"
    sign = "+" if z.imag > 0 else "-"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


@dataclass(frozen=True, eq=False)
class StateSpec:
    """A pure state as a unit-norm coefficient vector over |0> .. |dim-1>."""

    coefficients: np.ndarray
    kind: str  # "fock" | "coherent" | "superposition"
    label: str
    alpha: complex | None = None

    @property
    def dim(self) -> int:
        return self.coefficients.shape[0]

    @classmethod
    def fock(cls, n: int, dim: int = DEFAULT_DIM) -> "StateSpec":
        _check_dim(dim)
        if not 0 <= n < dim:
            raise ValueError(f"fock level {n} needs 0 <= n < dim = {dim}")
        coeff = np.zeros(dim, dtype=complex)
        coeff[n] = 1.0
        return cls(coeff, "fock", f"fock:{n}")

    @classmethod
    def coherent(cls, alpha, dim: int = DEFAULT_DIM) -> "StateSpec":
        _check_dim(dim)
        alpha = complex(alpha)
        coeff = np.empty(dim, dtype=complex)
        coeff[0] = 1.0
        for k in range(1, dim):  # c_k = alpha^k / sqrt(k!), overflow-free recurrence
            coeff[k] = coeff[k - 1] * alpha / math.sqrt(k)
        coeff *= math.exp(-0.5 * abs(alpha) ** 2)
        coeff /= np.linalg.norm(coeff)  # renormalize after truncation
        return cls(coeff, "coherent", f"coherent:{format_complex(alpha)}", alpha=alpha)

    @classmethod
    def superposition(cls, coefficients, dim: int | None = None,
                      label: str | None = None) -> "StateSpec":
        coeff = np.asarray(list(coefficients), dtype=complex).ravel()
        if coeff.size == 0:
            raise ValueError("superposition needs at least one coefficient")
        if dim is not None:
            if coeff.size > dim:
                raise ValueError(f"{coeff.size} coefficients exceed dim = {dim}")
            coeff = np.concatenate([coeff, np.zeros(dim - coeff.size, dtype=complex)])
        norm = np.linalg.norm(coeff)
        if norm < 1e-12:
            raise ValueError("cannot normalize an all-zero superposition")
        if label is None:
            label = "super:" + ",".join(format_complex(c) for c in coefficients)
        return cls(coeff / norm, "superposition", label)

    def support_order(self, cutoff: float = 1e-16) -> int:
        """Highest basis index with a coefficient above the cutoff."""
        significant = np.nonzero(np.abs(self.coefficients) > cutoff)[0]
        return int(significant[-1]) if significant.size else 0

    def support_radius(self) -> float:
        """Characteristic phase-space radius, used to pick integration cutoffs."""
        if self.kind == "coherent" and self.alpha is not None:
            return math.sqrt(2.0) * abs(self.alpha)
        return math.sqrt(2.0 * self.support_order() + 1.0)

    def radial_cutoff(self) -> float:
        """Integration cutoff beyond which all supported densities are negligible."""
        return 8.0 + 2.0 * self.support_radius()


def density_matrix(state: StateSpec) -> np.ndarray:
    """Rank-one projector |psi><psi| of a normalized state."""
    coeff = state.coefficients
    norm_sq = float(np.vdot(coeff, coeff).real)
    if abs(norm_sq - 1.0) > 1e-10:
        raise ValueError(f"normalization error: |psi|^2 = {norm_sq!r}")
    return np.outer(coeff, coeff.conj())


def expectation_trace(state: StateSpec, operator: np.ndarray) -> float:
    """Tr(rho A); the ground truth every tomographic pairing is checked against.

    Returns the real part; a large imaginary residue (only possible for a
    non-Hermitian operator) triggers a warning.
    """
    if operator.shape != (state.dim, state.dim):
        raise ValueError(
            f"dimension mismatch: operator {operator.shape}, state dim {state.dim}")
    value = complex(np.trace(density_matrix(state) @ operator))
    if abs(value.imag) > 1e-10:
        warnings.warn(f"expectation has imaginary residue {value.imag:.3e}", stacklevel=2)
    return value.real
