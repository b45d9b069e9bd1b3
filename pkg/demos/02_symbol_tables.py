"""Biorthogonal observable symbols from the Gaussian-weighted Gram system.

Builds the Gram matrices of the monomial bases, solves for the dual
polynomials at a few degrees, and verifies both forms of biorthogonality:
the weighted plane product (by exact moments) and the unit-circle product
(by periodic quadrature).
"""

import math

import numpy as np

from planetomo import (SymbolPolynomial, biorthogonal_symbols, circle_restriction,
                       gram_matrix, integrate_periodic, weighted_inner)


def render(poly):
    parts = []
    for (i, j), value in poly.terms_sorted():
        monomial = "".join(s for s, p in (("x^%d" % i, i), ("y^%d" % j, j)) if p) or "1"
        parts.append(f"{value * math.pi:+.4f}/pi {monomial}")
    return "  ".join(parts)


# --- Gram matrices in units of pi (rational entries)
for degree in (2, 3):
    print(f"Gram matrix at degree {degree}, in units of pi:")
    print(np.array2string(gram_matrix(degree) / math.pi, precision=4, suppress_small=True))
    print()

# --- the dual polynomials for degrees 1..3
for degree in (1, 2, 3):
    print(f"dual symbols of degree {degree}:")
    for k, poly in enumerate(biorthogonal_symbols(degree)):
        print(f"  f_{k}: {render(poly)}")
print()

# --- weighted biorthogonality against the monomials, by exact Gaussian moments
degree = 4
print(f"weighted products (f_k, x^(N-s) y^s) at degree {degree} (want identity):")
table = np.array([[weighted_inner(fk, SymbolPolynomial({(degree - s, s): 1.0}), degree)
                   for s in range(degree + 1)]
                  for fk in biorthogonal_symbols(degree)])
print(np.array2string(table, precision=2, suppress_small=True))

# --- circle biorthogonality: the same duality on the unit circle
worst = 0.0
for k, poly in enumerate(biorthogonal_symbols(degree)):
    angular = circle_restriction(poly)
    for s in range(degree + 1):
        value = integrate_periodic(
            lambda phi, s=s: np.cos(phi) ** (degree - s) * np.sin(phi) ** s * angular(phi),
            2 * math.pi, 512)
        worst = max(worst, abs(value - (1.0 if k == s else 0.0)))
print(f"\ncircle-product deviation from the identity at degree {degree}: {worst:.3e}")
