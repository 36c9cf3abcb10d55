"""
Cross-ratio primitive and its inversion for elementary quadrilaterals.
"""

import logging
from typing import Optional, Tuple

from ..config import DEGENERATE_FACTOR
from ..errors import DegenerateQuad
from .precision import ComplexPoint, PrecisionContext

logger = logging.getLogger(__name__)


def _threshold(ctx: PrecisionContext, *points: ComplexPoint):
    scale = ctx.scale(points)
    if scale == 0:
        scale = ctx.mpf(1)
    return DEGENERATE_FACTOR * ctx.eps * scale


def cross_ratio(f1: ComplexPoint, f2: ComplexPoint, f3: ComplexPoint, f4: ComplexPoint,
                ctx: PrecisionContext,
                location: Optional[Tuple[int, int]] = None) -> ComplexPoint:
    """
    q(f1, f2, f3, f4) = (f1-f2)(f3-f4) / ((f2-f3)(f4-f1)).

    Args:
        f1, f2, f3, f4: Quad vertices in cyclic order
        ctx: Precision context of the inputs
        location: Optional (n, m) reported on degeneracy

    Returns:
        The cross-ratio

    Raises:
        DegenerateQuad: if a denominator factor is below eps * scale
    """
    f1, f2, f3, f4 = (ctx.mpc(f) for f in (f1, f2, f3, f4))
    thr = _threshold(ctx, f1, f2, f3, f4)
    d1 = f2 - f3
    d2 = f4 - f1
    if abs(d1) < thr or abs(d2) < thr:
        raise DegenerateQuad("Cross-ratio denominator vanishes", location)
    return (f1 - f2) * (f3 - f4) / (d1 * d2)


def solve_fourth_point(f1: ComplexPoint, f2: ComplexPoint, f4: ComplexPoint,
                       lam: ComplexPoint, ctx: PrecisionContext,
                       location: Optional[Tuple[int, int]] = None) -> ComplexPoint:
    """
    Solve cross_ratio(f1, f2, f3, f4) = lam for f3.

    Returns:
        f3 = [(f1-f2) f4 + lam f2 (f4-f1)] / [(f1-f2) + lam (f4-f1)]

    Raises:
        DegenerateQuad: if f1 = f2, f4 = f1 or the solving denominator vanishes
    """
    f1, f2, f4, lam = (ctx.mpc(f) for f in (f1, f2, f4, lam))
    thr = _threshold(ctx, f1, f2, f4)
    a = f1 - f2
    b = f4 - f1
    if abs(a) < thr or abs(b) < thr:
        raise DegenerateQuad("Coincident quad vertices", location)
    denom = a + lam * b
    if abs(denom) < ctx.eps * (abs(a) + abs(lam * b)):
        raise DegenerateQuad("Fourth-point denominator vanishes", location)
    return (a * f4 + lam * f2 * b) / denom
