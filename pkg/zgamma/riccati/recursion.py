"""
Discrete Riccati recursion for boundary radius ratios.

    p_{n+1} = (g_n - t p_n) / (p_n - t g_n),   g_n = (2n+gamma) / (2(n+1)-gamma)

with t = cos(alpha). The ratio p_n = R_n / r_n of border to diagonal radii
obeys this recursion, and exactly one initial value keeps every p_n
positive. For t > 0 that solution is an unstable separatrix: an initial
error grows by (1+t)/(1-t) per step, so precision must grow with n.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from ..config import MIN_BITS, SEPARATRIX_MARGIN_BITS
from ..errors import ConfigError, PoleError
from ..lattice.precision import PrecisionContext, Real
from ..special.hypergeometric import HypergeometricParams, gauss_series, s_coefficients

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RiccatiParams:
    """
    Parameters (gamma, alpha) of the recursion.

    ``alpha_pi`` optionally gives alpha as a multiple of pi so that it is
    rebuilt exactly at any precision.
    """
    gamma: float
    alpha: float
    alpha_pi: Optional[float] = None

    def __post_init__(self):
        if not 0 < float(self.gamma) < 2:
            raise ConfigError(f"gamma must lie in (0, 2), got {self.gamma}")
        if not 0 < float(self.alpha) < math.pi:
            raise ConfigError(f"alpha must lie in (0, pi), got {self.alpha}")

    @classmethod
    def from_pi(cls, gamma: float, alpha_pi: float) -> 'RiccatiParams':
        return cls(gamma=gamma, alpha=alpha_pi * math.pi, alpha_pi=alpha_pi)

    def alpha_value(self, ctx: PrecisionContext) -> Real:
        if self.alpha_pi is not None:
            return ctx.mpf(self.alpha_pi) * ctx.pi
        return ctx.mpf(self.alpha)

    def gamma_value(self, ctx: PrecisionContext) -> Real:
        return ctx.mpf(self.gamma)

    def t(self, ctx: PrecisionContext) -> Real:
        """t = cos(alpha)."""
        return ctx.mp.cos(self.alpha_value(ctx))


class RiccatiStatus(Enum):
    """Outcome of an iteration."""
    ALL_POSITIVE = "all_positive"
    SIGN_LOSS = "sign_loss"
    POLE = "pole"


@dataclass
class RiccatiTrajectory:
    """p_0..p_k together with how the iteration ended."""
    p: List[Real]
    params: RiccatiParams
    status: RiccatiStatus
    exit_index: Optional[int] = None
    pole_index: Optional[int] = None
    bits: int = MIN_BITS

    @property
    def left_positive_at(self) -> Optional[int]:
        return self.exit_index

    def residuals(self, ctx: PrecisionContext) -> List[Real]:
        """|p_{n+1}(p_n - t g_n) - (g_n - t p_n)| for each recorded pair."""
        t = self.params.t(ctx)
        gamma = self.params.gamma_value(ctx)
        out = []
        for n in range(len(self.p) - 1):
            g = g_coeff(n, gamma, ctx)
            out.append(abs(self.p[n + 1] * (self.p[n] - t * g) - (g - t * self.p[n])))
        return out

    def to_rows(self) -> List[tuple]:
        return [(n, value) for n, value in enumerate(self.p)]


def g_coeff(n: int, gamma, ctx: Optional[PrecisionContext] = None) -> Real:
    """
    g_n(gamma) = (2n + gamma) / (2(n+1) - gamma).

    Raises:
        PoleError: at gamma = 2(n+1)
    """
    ctx = ctx or PrecisionContext()
    gamma = ctx.mpf(gamma)
    denom = 2 * (n + 1) - gamma
    if denom == 0:
        raise PoleError(f"g_{n} has a pole at gamma = {2 * (n + 1)}")
    return (2 * n + gamma) / denom


def riccati_iterate(p0, params: RiccatiParams, n_max: int,
                    ctx: Optional[PrecisionContext] = None,
                    stop_on_sign_loss: bool = True) -> RiccatiTrajectory:
    """
    Iterate the recursion from p0.

    Args:
        p0: Initial value
        params: (gamma, alpha)
        n_max: Last index to compute
        ctx: Precision context
        stop_on_sign_loss: Stop at the first p_n <= 0; otherwise keep
            iterating and only record the exit index

    Returns:
        RiccatiTrajectory; a near-zero denominator ends it with status POLE
    """
    ctx = ctx or PrecisionContext()
    t = params.t(ctx)
    gamma = params.gamma_value(ctx)
    p = [ctx.mpf(p0)]
    status = RiccatiStatus.ALL_POSITIVE
    exit_index = 0 if p[0] <= 0 else None
    pole_index = None
    if exit_index is not None:
        status = RiccatiStatus.SIGN_LOSS

    if exit_index is None or not stop_on_sign_loss:
        for n in range(n_max):
            pn = p[-1]
            g = g_coeff(n, gamma, ctx)
            denom = pn - t * g
            if abs(denom) < ctx.eps * (1 + abs(pn)):
                pole_index = n
                status = RiccatiStatus.POLE
                logger.debug(f"Riccati pole crossing at n={n}")
                break
            nxt = (g - t * pn) / denom
            p.append(nxt)
            if nxt <= 0 and exit_index is None:
                exit_index = n + 1
                status = RiccatiStatus.SIGN_LOSS
                if stop_on_sign_loss:
                    break

    return RiccatiTrajectory(p=p, params=params, status=status, exit_index=exit_index,
                             pole_index=pole_index, bits=ctx.mantissa_bits)


def p0_closed(params: RiccatiParams, ctx: Optional[PrecisionContext] = None) -> Real:
    """Positive initial value sin(gamma alpha / 2) / sin((2 - gamma) alpha / 2)."""
    ctx = ctx or PrecisionContext()
    mp = ctx.mp
    a = params.alpha_value(ctx)
    g = params.gamma_value(ctx)
    return mp.sin(g * a / 2) / mp.sin((2 - g) * a / 2)


def p0_hypergeometric(params: RiccatiParams, ctx: Optional[PrecisionContext] = None) -> Real:
    """
    Positive initial value from the hypergeometric s-function.

        p0 = 1 + 2(gamma-1) z / (2-gamma) + 4 z (z-1) / (2-gamma) * S'(z) / S(z)

    with z = (1+t)/2 and S the solution of the Gauss equation for
    a = (3-gamma)/2, b = (gamma-1)/2 that is regular at z = 1, i.e.
    S(z) = F(a, b; 3/2; 1-z). The series is summed in w = 1-z = (1-t)/2.
    """
    ctx = ctx or PrecisionContext()
    g = params.gamma_value(ctx)
    t = params.t(ctx)
    z = (1 + t) / 2
    a, b, _ = s_coefficients(g)
    res = gauss_series(HypergeometricParams(a, b, ctx.mpf(1.5), 1 - z), ctx, derivative=True)
    s_val = res.value
    s_prime = -res.derivative
    return 1 + 2 * (g - 1) * z / (2 - g) + 4 * z * (z - 1) / (2 - g) * s_prime / s_val


def p0_literal_series(params: RiccatiParams, ctx: Optional[PrecisionContext] = None) -> Real:
    """
    The same formula with the c = 1/2 series F(a, b; 1/2; z) at z = (1+t)/2.

    Kept as a diagnostic: it agrees with p0_closed only at gamma = 1.
    """
    ctx = ctx or PrecisionContext()
    g = params.gamma_value(ctx)
    t = params.t(ctx)
    z = (1 + t) / 2
    a, b, c = s_coefficients(g)
    res = gauss_series(HypergeometricParams(a, b, c, z), ctx, derivative=True)
    return 1 + 2 * (g - 1) * z / (2 - g) + 4 * z * (z - 1) / (2 - g) * res.derivative / res.value


def positivity_horizon(delta, params: RiccatiParams, n_max: int,
                       ctx: Optional[PrecisionContext] = None) -> int:
    """
    First n with p_n <= 0 when starting from p0_closed + delta.

    Returns:
        The exit index, or n_max + 1 if positivity survives to n_max

    Raises:
        PoleError: if the iteration hits a pole before any sign exit
    """
    ctx = ctx or PrecisionContext()
    traj = riccati_iterate(p0_closed(params, ctx) + ctx.mpf(delta), params, n_max, ctx)
    if traj.status is RiccatiStatus.POLE and traj.exit_index is None:
        raise PoleError(f"Riccati iteration hit a pole at n={traj.pole_index} before leaving p > 0")
    if traj.exit_index is None:
        return n_max + 1
    return traj.exit_index


def required_bits(alpha: float, n: int) -> int:
    """
    Mantissa width that keeps the positive separatrix through n steps.

    Errors grow by (1+t)/(1-t) per step when t = cos(alpha) > 0.
    """
    t = math.cos(alpha)
    loss = n * math.log2((1 + t) / (1 - t)) if t > 0 else 0.0
    return max(MIN_BITS, int(math.ceil(loss)) + SEPARATRIX_MARGIN_BITS)
