"""
Discrete Riccati recursion for border radii and its hypergeometric linearisation.
"""

from .recursion import (
    RiccatiParams,
    RiccatiStatus,
    RiccatiTrajectory,
    g_coeff,
    riccati_iterate,
    p0_closed,
    p0_hypergeometric,
    p0_literal_series,
    positivity_horizon,
    required_bits,
)
from .linear import (
    LinearSolution,
    basis_values,
    lambdas,
    linear_solution,
    separatrix_coefficients,
    series_arguments,
)

__all__ = [
    'RiccatiParams', 'RiccatiStatus', 'RiccatiTrajectory', 'g_coeff',
    'riccati_iterate', 'p0_closed', 'p0_hypergeometric', 'p0_literal_series',
    'positivity_horizon', 'required_bits',
    'LinearSolution', 'basis_values', 'lambdas', 'linear_solution',
    'separatrix_coefficients', 'series_arguments',
]
