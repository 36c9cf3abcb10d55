"""
Rebuild the discrete map from a radius field.

At an intersection point the four circle centres around it sit on two
straight lines, so along the m-direction

    f_{n+1,m+1} - f_{n+1,m} = R_{c(n+1,m+1)} / R_{c(n+1,m-1)} (f_{n+1,m} - f_{n+1,m-1})

and each kite is symmetric about the line through its two centres.
"""

import logging
from typing import Optional

from ..errors import DegenerateQuad, PoleError
from ..lattice.indices import to_sublattice
from ..lattice.precision import ComplexPoint, PrecisionContext
from .axis import equidistant_axis
from .models import GridMap, PatternConfig, RadiusField

logger = logging.getLogger(__name__)


def _reflect(p: ComplexPoint, a: ComplexPoint, b: ComplexPoint, ctx: PrecisionContext,
             location) -> ComplexPoint:
    """Mirror p across the line through a and b."""
    d = b - a
    if abs(d) <= ctx.eps * max(abs(a), abs(b), 1):
        raise DegenerateQuad("Kite centres coincide", location)
    w = (p - a) / d
    return a + d * ctx.mp.conj(w)


def reconstruct_map(field: RadiusField, config: Optional[PatternConfig] = None,
                    size: Optional[int] = None) -> GridMap:
    """
    GridMap on n+m <= size from the radii.

    Normalisation: f_{0,0} = 0 with f_{1,0} on the positive real axis.
    For z2 the origin circle is a point, f_{0,0} = f_{1,0} = f_{0,1} = 0 and
    f_{1,1} = R_i e^{i alpha}; otherwise f_{1,1} = 1 + (R_i/R_0) e^{i alpha}
    after scaling R_0 to 1.

    Args:
        field: Radius field
        config: Run parameters (defaults to the field's)
        size: Largest n+m (default min(config.size, 2 M_max))

    Raises:
        PoleError: if R_0 is infinite (Log has no map)
        DegenerateQuad: on coincident kite centres
    """
    config = config or field.config
    ctx = config.ctx
    mp = ctx.mp
    size = min(config.size, 2 * field.M_max) if size is None else size
    R0 = field[(0, 0)]
    if mp.isinf(R0):
        raise PoleError("R_0 is infinite; the map of this field is not defined")

    alpha = config.alpha_value()
    collapsed = R0 == 0
    if collapsed:
        scale = ctx.mpf(1)
        f11 = field[(0, 1)] * ctx.expi(alpha)
    else:
        scale = 1 / R0
        f11 = 1 + field[(0, 1)] * scale * ctx.expi(alpha)

    def radius(n: int, m: int):
        return field[to_sublattice(n, m)] * scale

    count = (size + 1) // 2 + 1
    right = [field[(K, K)] * scale for K in range(count)]
    left = [field[(-K, K)] * scale for K in range(count)]
    real = equidistant_axis(right, size, ctx)
    imag = equidistant_axis(left, size, ctx)
    beta_dir = ctx.expi(2 * alpha) if collapsed else _m_axis_direction(f11)

    v = {}
    for k in range(size + 1):
        v[(k, 0)] = ctx.mpc(real[k])
        v[(0, k)] = beta_dir * imag[k]
    if size >= 2:
        v[(1, 1)] = f11

    for s in range(3, size + 1):
        for a in range(1, s):
            b = s - a
            if (a, b) in v:
                continue
            n, m = a - 1, b - 1
            loc = (n, m)
            if (n + m) % 2 == 0:
                if m > 0:
                    base, prev = v[(n + 1, m)], v[(n + 1, m - 1)]
                    ratio = radius(n + 1, m + 1) / radius(n + 1, m - 1)
                else:
                    base, prev = v[(n, m + 1)], v[(n - 1, m + 1)]
                    ratio = radius(n + 1, m + 1) / radius(n - 1, m + 1)
                v[(a, b)] = base + ratio * (base - prev)
            else:
                v[(a, b)] = _reflect(v[(n, m)], v[(n + 1, m)], v[(n, m + 1)], ctx, loc)

    grid = GridMap(values=v, config=config, size=size, meta={'reconstructed': True})
    logger.info(f"Reconstructed {len(v)} points from {len(field)} radii")
    return grid


def _m_axis_direction(f11: ComplexPoint) -> ComplexPoint:
    """
    Unit direction of the m-axis, e^{i beta} with beta = 2 arg f_{1,1}.

    f_{1,1} is the centre of the kite on f_{0,0}, f_{1,0}, f_{0,1}; that kite
    is symmetric about the line through f_{0,0} and f_{1,1}.
    """
    u = f11 / abs(f11)
    return u * u

