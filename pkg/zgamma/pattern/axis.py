"""
Boundary data of the discrete map: diagonal radii and the two axes.

Along the real axis the constraint

    gamma f_n = 2n (f_{n+1} - f_n)(f_n - f_{n-1}) / (f_{n+1} - f_{n-1})

is a second-order recurrence. With f_0 = 0, f_1 = 1 its solution has
alternating equal edges r_0, r_1, r_1, r_2, r_2, ... where r_n are the
radii of the circles centred on the axis.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..errors import ConfigError, PoleError
from ..lattice.precision import ComplexPoint, PrecisionContext, Real
from ..riccati.recursion import g_coeff
from ..special.gamma import GammaRatioQuery, gamma_ratio
from .models import GridMap, PatternConfig, PatternMode

logger = logging.getLogger(__name__)


@dataclass
class AxisRadii:
    """r_0..r_n from the recurrence, with the closed form alongside."""
    values: List[Real]
    closed: List[Real]
    max_rel_diff: Real

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> Real:
        return self.values[n]


@dataclass
class AxisPoints:
    """f_{n,0} and f_{0,m} for n, m = 0..size."""
    real_axis: List[ComplexPoint]
    imag_axis: List[ComplexPoint]
    radii: List[Real] = field(default_factory=list)


def axis_radii(gamma, n_max: int, ctx: Optional[PrecisionContext] = None) -> AxisRadii:
    """
    Radii r_n of the circles centred at f_{2n,0}.

        r_{n+1} = (2n + gamma) / (2(n+1) - gamma) r_n,   r_0 = 1

    Args:
        gamma: Exponent in (0, 2)
        n_max: Last index
        ctx: Precision context

    Raises:
        PoleError: at gamma = 2
    """
    ctx = ctx or PrecisionContext()
    g = ctx.mpf(gamma)
    if g == 2:
        raise PoleError("axis radii have a pole at gamma = 2; use the z2 seed")
    values = [ctx.mpf(1)]
    for n in range(n_max):
        values.append(values[-1] * g_coeff(n, g, ctx))

    closed = [gamma_ratio(GammaRatioQuery(g / 2, n), ctx) / gamma_ratio(GammaRatioQuery(1 - g / 2, n), ctx)
              for n in range(n_max + 1)]
    diff = max(abs(a - b) / abs(b) for a, b in zip(values, closed))
    if diff > 100 * ctx.eps * max(1, n_max):
        logger.warning(f"Axis radii recurrence and closed form differ by {float(diff):.3e}")
    return AxisRadii(values=values, closed=closed, max_rel_diff=diff)


def equidistant_axis(diagonal: List[Real], size: int, ctx: PrecisionContext) -> List[Real]:
    """
    Points f_0..f_size with edges diagonal[0], diagonal[1], diagonal[1], diagonal[2], ...

    ``diagonal`` needs (size + 1) // 2 + 1 entries.
    """
    pts = [ctx.mpf(0)]
    for k in range(size):
        pts.append(pts[-1] + diagonal[(k + 1) // 2])
    return pts


def _m_axis_factor(config: PatternConfig) -> ComplexPoint:
    ctx = config.ctx
    if config.mode is PatternMode.KAPPA:
        return ctx.expi(ctx.mpf(config.gamma) * config.alpha_value()) / ctx.mpf(config.kappa)
    if config.mode is PatternMode.Z2:
        return ctx.expi(2 * config.alpha_value())
    return ctx.expi(config.beta_value())


def axis_points(config: PatternConfig, size: Optional[int] = None) -> AxisPoints:
    """
    Both axes from the equidistant construction.

    The m-axis is the real axis rotated by beta (scaled by 1/kappa in
    kappa mode). For z2 the diagonal radii are r_n = n.

    Raises:
        PoleError: for log mode (its origin circle is infinite)
    """
    ctx = config.ctx
    size = config.size if size is None else size
    if config.mode is PatternMode.LOG:
        raise PoleError("Log has R_0 = inf; build its radius field instead")
    count = (size + 1) // 2 + 1
    if config.mode is PatternMode.Z2:
        diagonal = [ctx.mpf(n) for n in range(count)]
    else:
        diagonal = axis_radii(config.gamma, count - 1, ctx).values

    real = equidistant_axis(diagonal, size, ctx)
    factor = _m_axis_factor(config)
    return AxisPoints(
        real_axis=[ctx.mpc(x) for x in real],
        imag_axis=[factor * x for x in real],
        radii=diagonal,
    )


def axis_points_from_constraint(config: PatternConfig, size: Optional[int] = None) -> AxisPoints:
    """
    Both axes by stepping the constraint recurrence directly.

        f_{n+1} = f_n + gamma f_n a / (2n a - gamma f_n),   a = f_n - f_{n-1}

    Raises:
        ConfigError: for z2 and log, whose collapsed or infinite origin
            makes the first step singular
    """
    if config.mode not in (PatternMode.ZGAMMA, PatternMode.KAPPA):
        raise ConfigError(f"the constraint recurrence does not build mode {config.mode.value}")
    ctx = config.ctx
    size = config.size if size is None else size
    g = ctx.mpf(config.gamma)
    real = [ctx.mpf(0), ctx.mpf(1)]
    for n in range(1, size):
        f = real[n]
        a = f - real[n - 1]
        real.append(f + g * f * a / (2 * n * a - g * f))
    real = real[:size + 1]
    factor = _m_axis_factor(config)
    return AxisPoints(real_axis=[ctx.mpc(x) for x in real], imag_axis=[factor * x for x in real])


def constraint_residual(grid: GridMap, n: int, m: int) -> Optional[Real]:
    """
    Relative residual of the two-index constraint at (n, m), or None
    if a needed neighbour is missing.
    """
    ctx = grid.config.ctx
    v = grid.values
    f = v[(n, m)]
    if f == 0:
        return None
    terms = []
    for k, (prev, nxt) in ((n, ((n - 1, m), (n + 1, m))), (m, ((n, m - 1), (n, m + 1)))):
        if k == 0:
            continue
        if prev not in v or nxt not in v:
            return None
        den = v[nxt] - v[prev]
        if den == 0:
            return None
        terms.append(2 * k * (v[nxt] - f) * (f - v[prev]) / den)
    lhs = ctx.mpf(grid.config.gamma) * f
    scale = abs(lhs) + sum(abs(x) for x in terms)
    return abs(lhs - sum(terms)) / scale


def axis_constraint_residual(config: PatternConfig, grid: GridMap,
                             interior: bool = True) -> Tuple[Real, Optional[Tuple[int, int]]]:
    """
    Worst relative constraint residual over the axes (and interior points).

    Returns:
        (max residual, location); location is None when nothing was checked
    """
    worst = config.ctx.mpf(-1)
    where = None
    for n, m in grid.keys():
        if (n, m) == (0, 0) or (not interior and n and m):
            continue
        res = constraint_residual(grid, n, m)
        if res is not None and res > worst:
            worst, where = res, (n, m)
    return max(worst, 0), where


def axis_map(config: PatternConfig, size: Optional[int] = None) -> GridMap:
    """A GridMap holding only the axis values."""
    pts = axis_points(config, size)
    values = {}
    for k, (x, y) in enumerate(zip(pts.real_axis, pts.imag_axis)):
        values[(k, 0)] = x
        values[(0, k)] = y
    return GridMap(values=values, config=config, size=len(pts.real_axis) - 1, meta={'axis_only': True})
