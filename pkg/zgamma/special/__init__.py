"""
Special functions: Gamma ratios, Gauss hypergeometric series, Stirling.
"""

from .gamma import GammaRatioQuery, gamma_ratio, stirling_gamma
from .hypergeometric import (
    HypergeometricParams,
    SeriesResult,
    gauss_series,
    hyp2f1,
    hyp2f1_reference,
    s_series,
    s_series_pochhammer,
    gauss_equation_residual,
)

__all__ = [
    'GammaRatioQuery', 'gamma_ratio', 'stirling_gamma',
    'HypergeometricParams', 'SeriesResult', 'gauss_series', 'hyp2f1',
    'hyp2f1_reference', 's_series', 's_series_pochhammer', 'gauss_equation_residual',
]
