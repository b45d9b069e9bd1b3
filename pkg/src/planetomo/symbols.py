"""Biorthogonal symbol polynomials built from the Gaussian-weighted Gram system.

For each homogeneity degree N the monomials x^(N-s) y^s carry a Gram matrix
under the 2/N!-scaled Gaussian product on the plane; solving it gives the
dual polynomials whose plane pairing against a state's distribution
reproduces symmetric word-sum averages.  Gram entries come from closed-form
Gaussian moments, never quadrature, so fixture comparisons are exact to
rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.linalg import cho_factor, cho_solve

MAX_DEGREE = 40
CONDITION_LIMIT = 1e12
IDENTITY_COEFF = 1.0 / (2.0 * math.pi)


class IllConditionedDegreeError(ValueError):
    """The Gram system at this degree cannot be solved to working precision."""


def gaussian_moment(k: int) -> float:
    """Closed-form line moment: 0 for odd k, (k-1)!! sqrt(pi) / 2^(k/2) for even k."""
    if k < 0:
        raise ValueError(f"moment order must be >= 0, got {k}")
    if k % 2:
        return 0.0
    value = math.sqrt(math.pi)
    for j in range(1, k, 2):
        value *= j / 2.0
    return value


class SymbolPolynomial:
    """Real polynomial sum c_ij x^i y^j held as a sparse coefficient map.

    The map is canonical: exact zeros are dropped at construction.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cleaned = {}
        for (i, j), value in dict(coeffs).items():
            i, j = int(i), int(j)
            if i < 0 or j < 0:
                raise ValueError(f"powers must be non-negative, got ({i}, {j})")
            value = float(value)
            if value != 0.0:
                cleaned[(i, j)] = value
        self.coeffs = cleaned

    def __call__(self, x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        total = np.zeros(np.broadcast(x, y).shape)
        for (i, j), value in self.coeffs.items():
            total = total + value * x ** i * y ** j
        return total if total.ndim else float(total)

    @property
    def degree(self) -> int:
        return max((i + j for i, j in self.coeffs), default=0)

    @property
    def is_homogeneous(self) -> bool:
        return len({i + j for i, j in self.coeffs}) <= 1

    def terms_sorted(self):
        """Coefficients in deterministic (y-power, x-power) order."""
        return sorted(self.coeffs.items(), key=lambda item: (item[0][1], item[0][0]))

    def __add__(self, other: "SymbolPolynomial") -> "SymbolPolynomial":
        merged = dict(self.coeffs)
        for key, value in other.coeffs.items():
            merged[key] = merged.get(key, 0.0) + value
        return SymbolPolynomial(merged)

    def __sub__(self, other: "SymbolPolynomial") -> "SymbolPolynomial":
        return self + (-1.0) * other

    def __mul__(self, scalar: float) -> "SymbolPolynomial":
        return SymbolPolynomial({key: scalar * value for key, value in self.coeffs.items()})

    __rmul__ = __mul__

    def __neg__(self) -> "SymbolPolynomial":
        return (-1.0) * self

    def __repr__(self):
        body = ", ".join(f"({i},{j}): {value!r}" for (i, j), value in self.terms_sorted())
        return f"SymbolPolynomial({{{body}}})"


def identity_symbol() -> SymbolPolynomial:
    """Symbol of the identity operator: the constant 1/(2 pi)."""
    return SymbolPolynomial({(0, 0): IDENTITY_COEFF})


def _odd_double_factorial(k: int) -> int:
    """(k)!! for odd k, with (-1)!! = 1."""
    out = 1
    for j in range(1, k + 1, 2):
        out *= j
    return out


def gram_matrix(degree: int) -> np.ndarray:
    """Gram matrix of the monomials x^(N-s) y^s, including the 2/N! prefactor.

    Entry (i, j) is (2/N!) * moment(2N - i - j) * moment(i + j); odd-sum
    entries vanish, giving the checkerboard sparsity the per-parity solves
    rely on.  The rational part of each entry is carried exactly and pi is
    applied once, so printed-table comparisons are exact to one rounding.
    """
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    size = degree + 1
    gram = np.zeros((size, size))
    for i in range(size):
        for j in range(size):
            total = i + j
            if total % 2:
                continue
            rational = Fraction(2 * _odd_double_factorial(2 * degree - total - 1)
                                * _odd_double_factorial(total - 1),
                                math.factorial(degree) * 2 ** degree)
            gram[i, j] = float(rational) * math.pi
    return gram


@lru_cache(maxsize=None)
def biorthogonal_symbols(degree: int) -> tuple[SymbolPolynomial, ...]:
    """The dual polynomials f_k with (f_k, x^(N-s) y^s) = delta_ks at degree N.

    The Gram checkerboard decouples even and odd monomial indices, so each
    parity class gets one Cholesky factorization reused for all its k.  The
    class with excessive condition number is refused rather than solved to
    garbage digits.
    """
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    if degree > MAX_DEGREE:
        raise IllConditionedDegreeError(
            f"degree {degree} above cap {MAX_DEGREE}")
    gram = gram_matrix(degree)
    coords = np.zeros((degree + 1, degree + 1))
    for parity in (0, 1):
        index = np.arange(parity, degree + 1, 2)
        if index.size == 0:
            continue
        block = gram[np.ix_(index, index)]
        condition = float(np.linalg.cond(block))
        if not np.isfinite(condition) or condition > CONDITION_LIMIT:
            raise IllConditionedDegreeError(
                f"ill-conditioned degree {degree}: Gram block condition {condition:.3e} "
                f"exceeds {CONDITION_LIMIT:.0e}")
        try:
            factor = cho_factor(block)
        except np.linalg.LinAlgError as exc:
            raise IllConditionedDegreeError(
                f"Gram solve failed at degree {degree}: {exc}") from exc
        solution = cho_solve(factor, np.eye(index.size))
        # one refinement step keeps the table entries correctly rounded
        solution += cho_solve(factor, np.eye(index.size) - block @ solution)
        coords[np.ix_(index, index)] = solution
    return tuple(
        SymbolPolynomial({(degree - s, s): coords[s, k] for s in range(degree + 1)})
        for k in range(degree + 1)
    )


def circle_restriction(symbol: SymbolPolynomial):
    """Restrict a homogeneous symbol to the unit circle, returning H(phi)."""
    if not symbol.is_homogeneous:
        raise ValueError("invalid symbol: circle restriction needs a homogeneous polynomial")

    def angular(phi):
        phi = np.asarray(phi, dtype=float)
        return symbol(np.cos(phi), np.sin(phi))

    return angular


def weighted_inner(f: SymbolPolynomial, g: SymbolPolynomial, degree: int) -> float:
    """Gaussian-weighted plane product (f, g) with the 2/N! scale, via exact moments."""
    scale = 2.0 / math.factorial(degree)
    total = 0.0
    for (a, b), cf in f.coeffs.items():
        for (c, d), cg in g.coeffs.items():
            total += cf * cg * gaussian_moment(a + c) * gaussian_moment(b + d)
    return scale * total


@dataclass(frozen=True)
class ObservableExpr:
    """Real combination of symmetric word sums S(m, n) plus a constant times identity."""

    terms: tuple[tuple[tuple[int, int], float], ...]
    const: float = 0.0

    @classmethod
    def from_terms(cls, terms, const: float = 0.0) -> "ObservableExpr":
        merged: dict[tuple[int, int], float] = {}
        for (m, n), coeff in dict(terms).items():
            m, n = int(m), int(n)
            if m < 0 or n < 0:
                raise ValueError(f"unsupported observable: S({m},{n})")
            if m + n > MAX_DEGREE:
                raise ValueError(
                    f"unsupported observable: degree {m + n} above cap {MAX_DEGREE}")
            coeff = float(coeff)
            if coeff != 0.0:
                merged[(m, n)] = coeff
        return cls(tuple(sorted(merged.items())), float(const))

    @classmethod
    def word(cls, m: int, n: int, coeff: float = 1.0) -> "ObservableExpr":
        return cls.from_terms({(m, n): coeff})

    @classmethod
    def number(cls) -> "ObservableExpr":
        """(q^2 + p^2 - 1) / 2, with eigenvalue n on |n>."""
        return cls.from_terms({(2, 0): 0.5, (0, 2): 0.5}, const=-0.5)

    @classmethod
    def identity(cls, coeff: float = 1.0) -> "ObservableExpr":
        return cls.from_terms({}, const=coeff)

    def label(self) -> str:
        parts: list[str] = []
        for (m, n), coeff in self.terms:
            parts.append(_term_text(coeff, f"S({m},{n})", first=not parts))
        if self.const != 0.0 or not parts:
            parts.append(_term_text(self.const, "I", first=not parts))
        return "".join(parts)


def _term_text(coeff: float, generator: str, first: bool) -> str:
    sign = "-" if coeff < 0 else ("" if first else "+")
    magnitude = abs(coeff)
    body = generator if magnitude == 1.0 else f"{magnitude!r}*{generator}"
    return sign + body


def observable_symbol(expr: ObservableExpr) -> SymbolPolynomial:
    """Plane symbol of an observable: coefficient-weighted duals plus const / (2 pi).

    Pairing the result against the plane distribution reproduces the same
    combination of word-sum averages the trace oracle computes.
    """
    total: dict[tuple[int, int], float] = {}
    for (m, n), coeff in expr.terms:
        for key, value in biorthogonal_symbols(m + n)[n].coeffs.items():
            total[key] = total.get(key, 0.0) + coeff * value
    if expr.const:
        total[(0, 0)] = total.get((0, 0), 0.0) + expr.const * IDENTITY_COEFF
    return SymbolPolynomial(total)
