"""
Geometric validation: kites, orientation, intersection angles, embeddedness
and the sign condition.
"""

from .report import CheckStatus, ValidationReport, ValidationSummary
from .predicates import orient2d, segments_cross, strictly_inside
from .checks import (
    classify_quad,
    intersection_angle,
    check_kites,
    check_orientation,
    check_angles,
    check_embedded_bruteforce,
    check_sign_condition,
    check_all,
)

__all__ = [
    'CheckStatus', 'ValidationReport', 'ValidationSummary',
    'orient2d', 'segments_cross', 'strictly_inside',
    'classify_quad', 'intersection_angle', 'check_kites', 'check_orientation',
    'check_angles', 'check_embedded_bruteforce', 'check_sign_condition', 'check_all',
]
