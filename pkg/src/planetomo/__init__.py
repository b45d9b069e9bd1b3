"""Phase-space tomography on the plane.

Tomographic distributions (optical, symplectic, planar) for Fock-basis
states, biorthogonal observable symbols of any degree, and observable
averages by plane integration, all cross-checked against an exact
operator-trace oracle in a truncated number basis.
"""

from .fock import (DEFAULT_DIM, StateSpec, annihilation_op, creation_op, density_matrix,
                   expectation_trace, format_complex, identity_op, interior, momentum_op,
                   number_op, paper_symmetrization, position_op, symmetric_word_sum)
from .pairing import (CalibrationError, ExpectationReport, PairingConfig, PlanePairer,
                      calibrate_kappa, expect_optical, expect_planar, expect_trace,
                      expectation_report, observable_matrix, pair_optical, pair_planar)
from .parsing import SpecParseError, parse_axis, parse_complex, parse_observable, parse_state
from .quadrature import (IntegrationError, QuadratureRule, RuleConstructionError,
                         gauss_hermite, gauss_legendre, integrate_panels, integrate_periodic,
                         panel_nodes, radon_line_integral)
from .states import WignerEvaluator, eval_coherent, eval_fock, hermite, wavefunction, wigner
from .symbols import (IllConditionedDegreeError, MAX_DEGREE, ObservableExpr, SymbolPolynomial,
                      biorthogonal_symbols, circle_restriction, gaussian_moment, gram_matrix,
                      identity_symbol, observable_symbol, weighted_inner)
from .tomograms import AxisSpec, TomogramGrid, optical, planar, sample_grid, symplectic

__version__ = "0.1.0"

__all__ = [
    "AxisSpec", "CalibrationError", "DEFAULT_DIM", "ExpectationReport",
    "IllConditionedDegreeError", "IntegrationError", "MAX_DEGREE", "ObservableExpr",
    "PairingConfig", "PlanePairer", "QuadratureRule", "RuleConstructionError",
    "SpecParseError", "StateSpec", "SymbolPolynomial", "TomogramGrid", "WignerEvaluator",
    "annihilation_op", "biorthogonal_symbols", "calibrate_kappa", "circle_restriction",
    "creation_op", "density_matrix", "eval_coherent", "eval_fock", "expect_optical",
    "expect_planar", "expect_trace", "expectation_report", "expectation_trace",
    "format_complex", "gauss_hermite", "gauss_legendre", "gaussian_moment", "gram_matrix",
    "hermite", "identity_op", "identity_symbol", "integrate_panels", "integrate_periodic",
    "interior", "momentum_op", "number_op", "observable_matrix", "observable_symbol",
    "optical", "pair_optical", "pair_planar", "panel_nodes", "paper_symmetrization",
    "parse_axis", "parse_complex", "parse_observable", "parse_state", "planar",
    "position_op", "radon_line_integral", "sample_grid", "symmetric_word_sum",
    "symplectic", "wavefunction", "wigner",
]
