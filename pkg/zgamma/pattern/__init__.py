"""
Pattern generation: axes, interior propagation, radius fields,
reconstruction, duality and asymptotics.

The generation coordinator lives in ``zgamma.pattern.coordinator``; it
depends on ``zgamma.geometry`` and is not re-exported here.
"""

from .models import PatternMode, PatternConfig, GridMap, RadiusField, Circle, CirclePattern
from .axis import (
    AxisRadii,
    AxisPoints,
    axis_radii,
    axis_points,
    axis_points_from_constraint,
    axis_constraint_residual,
    axis_map,
    constraint_residual,
)
from .generator import propagate_interior, generate_map, cross_ratio_residual
from .radii import (
    FieldResiduals,
    initial_radii,
    radii_evolution,
    border_radii,
    z2_field,
    dual_field,
    extract_radius_field,
    square_residual,
    ri_residual,
    field_residuals,
    radius_lookup,
    max_relative_difference,
    is_symmetric,
)
from .reconstruct import reconstruct_map
from .asymptotics import AsymptoticFit, fit_asymptotics

__all__ = [
    'PatternMode', 'PatternConfig', 'GridMap', 'RadiusField', 'Circle', 'CirclePattern',
    'AxisRadii', 'AxisPoints', 'axis_radii', 'axis_points', 'axis_points_from_constraint',
    'axis_constraint_residual', 'axis_map', 'constraint_residual',
    'propagate_interior', 'generate_map', 'cross_ratio_residual',
    'FieldResiduals', 'initial_radii', 'radii_evolution', 'border_radii', 'z2_field',
    'dual_field', 'extract_radius_field', 'square_residual', 'ri_residual',
    'field_residuals', 'radius_lookup', 'max_relative_difference', 'is_symmetric',
    'reconstruct_map', 'AsymptoticFit', 'fit_asymptotics',
]
