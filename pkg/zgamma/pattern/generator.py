"""
Interior of the discrete map by cross-ratio propagation.

Given both axes, every f_{n+1,m+1} follows from the other three corners of
its quad through q(f_{n,m}, f_{n+1,m}, f_{n+1,m+1}, f_{n,m+1}) = lambda with
lambda = kappa^2 e^{-2 i alpha}. Quads are filled front by front in
increasing n+m.
"""

import logging
from typing import Optional

from ..errors import ConfigError, DegenerateQuad
from ..lattice.cross_ratio import cross_ratio, solve_fourth_point
from ..lattice.precision import Real
from .axis import AxisPoints, axis_constraint_residual, axis_points
from .models import GridMap, PatternConfig, PatternMode

logger = logging.getLogger(__name__)


def propagate_interior(config: PatternConfig, axis: Optional[AxisPoints] = None) -> GridMap:
    """
    Fill the triangle n+m <= size.

    Args:
        config: Run parameters
        axis: Precomputed axes (built from config when omitted)

    Returns:
        GridMap with meta 'constraint_residual' and 'constraint_at'

    Raises:
        DegenerateQuad: with the (n, m) of the failing quad
    """
    ctx = config.ctx
    size = config.size
    if config.is_skew:
        logger.warning(f"Skew initial data beta={config.beta} != gamma*alpha; "
                       f"validation will only warn")
    axis = axis or axis_points(config)
    lam = config.cross_ratio_value()

    values = {}
    for k in range(size + 1):
        values[(k, 0)] = axis.real_axis[k]
        values[(0, k)] = axis.imag_axis[k]

    for s in range(2, size + 1):
        for n in range(1, s):
            m = s - n
            loc = (n - 1, m - 1)
            values[(n, m)] = solve_fourth_point(values[(n - 1, m - 1)], values[(n, m - 1)],
                                                values[(n - 1, m)], lam, ctx, location=loc)
        logger.debug(f"front n+m={s} done")

    grid = GridMap(values=values, config=config, size=size)
    worst, where = axis_constraint_residual(config, grid)
    grid.meta['constraint_residual'] = worst
    grid.meta['constraint_at'] = where
    logger.info(f"Propagated {len(values)} points (size {size}, {ctx.mantissa_bits} bits); "
                f"constraint residual {float(worst):.3e}")
    return grid


def generate_map(config: PatternConfig) -> GridMap:
    """Axes plus interior for zgamma and kappa modes."""
    if config.mode not in (PatternMode.ZGAMMA, PatternMode.KAPPA):
        raise ConfigError(f"generate_map does not build mode {config.mode.value}; "
                          f"use the radius-field path")
    return propagate_interior(config, axis_points(config))


def cross_ratio_residual(grid: GridMap) -> Real:
    """Largest |q - lambda| / |lambda| over all quads."""
    ctx = grid.config.ctx
    lam = grid.config.cross_ratio_value()
    worst = ctx.mpf(0)
    for n, m in grid.quads():
        try:
            q = cross_ratio(*grid.quad(n, m), ctx, location=(n, m))
        except DegenerateQuad:
            continue
        err = abs(q - lam) / abs(lam)
        if err > worst:
            worst = err
    return worst
