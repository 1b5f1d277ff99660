"""Entanglement of formation of two-mode Gaussian states.

Covariance matrices are vacuum-normalized: the vacuum CM is the 4x4
identity, quadrature ordering (x_A, p_A, x_B, p_B).  The exact EOF is
computed through the EPR-like-uncertainty pipeline; the Gaussian EOF,
published lower and upper bounds, a truncated-Fock-space oracle and a
Monte-Carlo decomposition check provide independent verification routes.
"""

from .bounds import (BoundsReport, GammaCandidate, bounds_report, gaussian_eof,
                     minimize_reduced_determinant, oliveira_upper, rigolin_lower)
from .decomposition import (DecompositionSpec, decomposition_spec,
                            reconstruct_cm, sample_displacements,
                            verify_reconstruction)
from .eof_core import (EofReport, eof, eof_from_cm, f_aux, g_kappa,
                       giovannetti_family, squeezed_thermal_eof, symmetric_eof)
from .epr_uncertainty import (EprQuantities, delta0, delta_general,
                              delta_prime, delta_pure_squeezed,
                              r_from_delta_prime, uncertainty_floor)
from .errors import (AmbiguousSigns, Degenerate, DegenerateCorrelation,
                     DomainError, GaussianEofError, Infeasible, InvalidState,
                     NonFiniteEntry, NoRoot, NotPsd, SandwichViolation,
                     TruncationTooCoarse)
from .fock_oracle import (SchmidtSpectrum, delta_of_spectrum,
                          entropy_of_spectrum, minimal_entropy_spectrum,
                          schmidt_coeffs_squeezed)
from .standard_form_solver import (CriticalParams, SqueezingSolution,
                                   critical_params, solve_squeezings)
from .symplectic_core import (OMEGA, StandardFormParams, ValidityReport,
                              local_rotation, local_squeeze,
                              random_local_symplectic,
                              reduce_to_standard_params, squeezed_vacuum_cm,
                              standard_form_cm, symplectic_eigenvalues,
                              validate_cm)

__version__ = "0.1.0"

__all__ = [
    "OMEGA", "AmbiguousSigns", "BoundsReport", "CriticalParams",
    "Degenerate", "DegenerateCorrelation", "DecompositionSpec", "DomainError",
    "EofReport", "EprQuantities", "GammaCandidate", "GaussianEofError",
    "Infeasible", "InvalidState", "NonFiniteEntry", "NoRoot", "NotPsd",
    "SandwichViolation", "SchmidtSpectrum", "SqueezingSolution",
    "StandardFormParams", "TruncationTooCoarse", "ValidityReport",
    "bounds_report", "critical_params", "delta0", "delta_general",
    "delta_of_spectrum", "delta_prime", "delta_pure_squeezed",
    "decomposition_spec", "entropy_of_spectrum", "eof", "eof_from_cm",
    "f_aux", "g_kappa", "gaussian_eof", "giovannetti_family",
    "local_rotation", "local_squeeze", "minimal_entropy_spectrum",
    "minimize_reduced_determinant", "oliveira_upper",
    "r_from_delta_prime", "random_local_symplectic", "reconstruct_cm",
    "reduce_to_standard_params", "rigolin_lower", "sample_displacements",
    "schmidt_coeffs_squeezed", "solve_squeezings", "squeezed_thermal_eof",
    "squeezed_vacuum_cm", "standard_form_cm", "symmetric_eof",
    "symplectic_eigenvalues", "uncertainty_floor", "validate_cm",
    "verify_reconstruction",
]
