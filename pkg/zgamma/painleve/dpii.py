"""
Unitary discrete Painleve II equation on the N = 0 line.

    (n+1)(x_n^2 - 1) (x_{n+1} + x_n/e) / (e + x_n x_{n+1})
      - n (1 - x_n^2/e^2) (x_{n-1} + e x_n) / (e + x_{n-1} x_n)
      = gamma x_n (e^2 - 1) / (2 e^2),          e = exp(i alpha)

Solved for x_{n+1} this is a Moebius map of the unit circle. The solution
from x_0 = exp(i gamma alpha / 2) stays in the sector 0 < arg x_n < alpha.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from ..errors import StepSingular
from ..lattice.precision import ComplexPoint, PrecisionContext, Real

logger = logging.getLogger(__name__)


@dataclass
class DPIITrajectory:
    """x_0..x_k with the pre-projection unitarity drift of each step."""
    gamma: float
    alpha: Real
    x: List[ComplexPoint] = field(default_factory=list)
    drift: List[Real] = field(default_factory=list)

    def args(self, ctx: PrecisionContext) -> List[Real]:
        return [ctx.mp.arg(v) for v in self.x]

    def in_sector(self, ctx: PrecisionContext) -> bool:
        return all(0 < a < self.alpha for a in self.args(ctx))

    def to_rows(self, ctx: PrecisionContext) -> List[tuple]:
        return [(n, a) for n, a in enumerate(self.args(ctx))]


def dpii_raw_step(x_prev: Optional[ComplexPoint], x_cur: ComplexPoint, n: int,
                  gamma, alpha, ctx: Optional[PrecisionContext] = None) -> ComplexPoint:
    """
    x_{n+1} before projection to the unit circle.

    Raises:
        StepSingular: if x_n^2 = 1, e + x_{n-1} x_n = 0 or the solving
            denominator 1 - T x_n vanishes
    """
    ctx = ctx or PrecisionContext()
    e = ctx.expi(alpha)
    e2 = e * e
    x = ctx.mpc(x_cur)
    g = ctx.mpf(gamma)

    lead = (n + 1) * (x * x - 1)
    if abs(lead) < ctx.eps * (n + 1):
        raise StepSingular("x^2-1", n)
    rhs = g * x * (e2 - 1) / (2 * e2)
    if n > 0:
        xp = ctx.mpc(x_prev)
        den = e + xp * x
        if abs(den) < ctx.eps:
            raise StepSingular("e+x_prev*x", n)
        rhs += n * (1 - x * x / e2) * (xp + e * x) / den
    T = rhs / lead

    den = 1 - T * x
    if abs(den) < ctx.eps * (1 + abs(T)):
        raise StepSingular("1-T*x", n)
    return (T * e - x / e) / den


def dpii_step(x_prev: Optional[ComplexPoint], x_cur: ComplexPoint, n: int,
              gamma, alpha, ctx: Optional[PrecisionContext] = None) -> ComplexPoint:
    """x_{n+1}, projected back to |x| = 1."""
    raw = dpii_raw_step(x_prev, x_cur, n, gamma, alpha, ctx)
    return raw / abs(raw)


def dpii_trajectory(gamma, alpha, n_max: int, ctx: Optional[PrecisionContext] = None,
                    x0: Optional[ComplexPoint] = None) -> DPIITrajectory:
    """
    Iterate from x_0 (default exp(i gamma alpha / 2)) to x_{n_max}.

    Args:
        gamma: Exponent
        alpha: Intersection angle (radians or an mpf of ctx)
        n_max: Last index
        ctx: Precision context
        x0: Optional seed on the unit circle
    """
    ctx = ctx or PrecisionContext()
    a = ctx.mpf(alpha)
    if x0 is None:
        x0 = ctx.expi(ctx.mpf(gamma) * a / 2)
    traj = DPIITrajectory(gamma=gamma, alpha=a, x=[ctx.mpc(x0)], drift=[ctx.mpf(0)])
    prev = None
    for n in range(n_max):
        raw = dpii_raw_step(prev, traj.x[-1], n, gamma, a, ctx)
        size = abs(raw)
        traj.drift.append(abs(size - 1))
        prev = traj.x[-1]
        traj.x.append(raw / size)
    logger.debug(f"dPII: {n_max} steps, max drift {float(max(traj.drift)):.3e}")
    return traj
