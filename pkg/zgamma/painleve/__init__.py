"""
Discrete Painleve machinery: the (P, Q) system, separatrix shooting and dPII.
"""

from .system import (
    PainleveParams,
    PQState,
    Domain,
    PainleveTrajectory,
    F_boundary,
    classify,
    in_D0,
    in_Du,
    in_Dd,
    in_Df,
    painleve_step,
    initial_state,
    trajectory,
    exit_index,
    state_from_radii,
    radii_residuals,
)
from .shooting import ShootingResult, separatrix_bisect
from .dpii import DPIITrajectory, dpii_raw_step, dpii_step, dpii_trajectory

__all__ = [
    'PainleveParams', 'PQState', 'Domain', 'PainleveTrajectory', 'F_boundary',
    'classify', 'in_D0', 'in_Du', 'in_Dd', 'in_Df', 'painleve_step',
    'initial_state', 'trajectory', 'exit_index', 'state_from_radii', 'radii_residuals',
    'ShootingResult', 'separatrix_bisect',
    'DPIITrajectory', 'dpii_raw_step', 'dpii_step', 'dpii_trajectory',
]
