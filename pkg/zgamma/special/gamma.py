"""
Gamma-function ratios and the Stirling approximation.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from ..config import POLE_FACTOR
from ..errors import PoleError
from ..lattice.precision import PrecisionContext, Real

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GammaRatioQuery:
    """Arguments of v_{x,m} = Gamma(x+m) / Gamma(x)."""
    x: float
    m: float


def _near_pole(ctx: PrecisionContext, value) -> bool:
    if value > 0:
        return False
    nearest = ctx.mp.nint(value)
    return abs(value - nearest) <= POLE_FACTOR * ctx.eps * max(1, abs(value))


def gamma_ratio(q: GammaRatioQuery, ctx: Optional[PrecisionContext] = None) -> Real:
    """
    Gamma(x+m) / Gamma(x) via log-gamma differences.

    Args:
        q: The query (x, m)
        ctx: Precision context (53-bit if omitted)

    Returns:
        The ratio as a real of ctx

    Raises:
        PoleError: if x or x+m is a non-positive integer within tolerance
    """
    ctx = ctx or PrecisionContext()
    mp = ctx.mp
    x = ctx.mpf(q.x)
    xm = x + ctx.mpf(q.m)
    if _near_pole(ctx, x) or _near_pole(ctx, xm):
        raise PoleError(f"Gamma pole in ratio Gamma({xm})/Gamma({x})")
    if x > 0 and xm > 0:
        return mp.exp(mp.loggamma(xm) - mp.loggamma(x))
    return mp.gamma(xm) * mp.rgamma(x)


def stirling_gamma(x, ctx: Optional[PrecisionContext] = None) -> Real:
    """Stirling approximation sqrt(2 pi) e^{-x} x^{x - 1/2}, for x > 0."""
    ctx = ctx or PrecisionContext()
    mp = ctx.mp
    x = ctx.mpf(x)
    return mp.sqrt(2 * mp.pi) * mp.exp(-x) * mp.power(x, x - ctx.mpf(0.5))
