"""
Lattice core: precision contexts, index conventions and the cross-ratio.
"""

from .precision import PrecisionContext, ComplexPoint, Real
from .indices import (
    LatticeIndex,
    SublatticeIndex,
    to_sublattice,
    to_lattice,
    in_V,
    in_Vl,
    in_Vint,
    in_Vrint,
    iter_V,
    iter_centers,
)
from .cross_ratio import cross_ratio, solve_fourth_point

__all__ = [
    'PrecisionContext', 'ComplexPoint', 'Real',
    'LatticeIndex', 'SublatticeIndex', 'to_sublattice', 'to_lattice',
    'in_V', 'in_Vl', 'in_Vint', 'in_Vrint', 'iter_V', 'iter_centers',
    'cross_ratio', 'solve_fourth_point',
]
