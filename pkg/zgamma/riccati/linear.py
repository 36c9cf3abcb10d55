"""
Linearisation of the Riccati recursion.

The Ansatz p_n = y_{n+1}/y_n + t g_n turns the recursion into

    y_{n+2} + t (g_{n+1} + 1) y_{n+1} + (t^2 - 1) g_n y_n = 0,

whose general solution is, with x = n + 1 - gamma/2,

    y_n = Gamma(n+1/2)/Gamma(x) [c1 lam1^x F(a, b; 1/2-n; (1-t)/2)
                                + c2 lam2^x F(a, b; 1/2-n; (1+t)/2)]

where a = (3-gamma)/2, b = (gamma-1)/2, lam1 = -(1+t), lam2 = 1-t and
lam1^x is taken as (-1)^n (1+t)^x.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..lattice.precision import PrecisionContext, Real
from ..special.gamma import GammaRatioQuery, gamma_ratio
from ..special.hypergeometric import HypergeometricParams, gauss_series, s_coefficients
from .recursion import RiccatiParams, g_coeff, p0_closed

logger = logging.getLogger(__name__)


@dataclass
class LinearSolution:
    """Values y_0..y_{n_max} of one (c1, c2) combination."""
    c1: Real
    c2: Real
    y: List[Real]
    params: RiccatiParams
    basis: List[Tuple[Real, Real]]
    bits: int

    def _ctx(self) -> PrecisionContext:
        return PrecisionContext(self.bits)

    def residuals(self) -> List[Real]:
        """Relative residual of the three-term recurrence for each n."""
        ctx = self._ctx()
        t = self.params.t(ctx)
        gamma = self.params.gamma_value(ctx)
        out = []
        for n in range(len(self.y) - 2):
            y0, y1, y2 = self.y[n], self.y[n + 1], self.y[n + 2]
            r = y2 + t * (g_coeff(n + 1, gamma, ctx) + 1) * y1 + (t * t - 1) * g_coeff(n, gamma, ctx) * y0
            scale = max(abs(y0), abs(y1), abs(y2))
            out.append(abs(r) / scale if scale else abs(r))
        return out

    def ansatz_p(self) -> List[Real]:
        """p_n = y_{n+1}/y_n + t g_n."""
        ctx = self._ctx()
        t = self.params.t(ctx)
        gamma = self.params.gamma_value(ctx)
        return [self.y[n + 1] / self.y[n] + t * g_coeff(n, gamma, ctx)
                for n in range(len(self.y) - 1)]

    def step_ratio(self, n: int) -> Real:
        """
        y_{n+1} / y_n.

        The characteristic roots of the recurrence are lam1 and lam2. For
        0 < t < 1 the ratio tends to lam1 unless y is the minimal solution
        (the separatrix), whose ratio tends to lam2.
        """
        return self.y[n + 1] / self.y[n]


def lambdas(params: RiccatiParams, ctx: PrecisionContext) -> Tuple[Real, Real]:
    """(lam1, lam2) = (-t-1, 1-t)."""
    t = params.t(ctx)
    return -t - 1, 1 - t


def series_arguments(params: RiccatiParams, ctx: PrecisionContext) -> Tuple[Real, Real]:
    """Series arguments of the lam1 and lam2 branches: ((1-t)/2, (1+t)/2)."""
    t = params.t(ctx)
    return (1 - t) / 2, (1 + t) / 2


def basis_values(n: int, params: RiccatiParams,
                 ctx: Optional[PrecisionContext] = None) -> Tuple[Real, Real]:
    """The two independent solutions (Y1_n, Y2_n) at index n."""
    ctx = ctx or PrecisionContext()
    mp = ctx.mp
    gamma = params.gamma_value(ctx)
    t = params.t(ctx)
    x = n + 1 - gamma / 2
    a, b, _ = s_coefficients(gamma)
    c = ctx.mpf(0.5) - n
    z1, z2 = series_arguments(params, ctx)

    prefactor = gamma_ratio(GammaRatioQuery(x, (gamma - 1) / 2), ctx)
    f1 = gauss_series(HypergeometricParams(a, b, c, z1), ctx).value
    f2 = gauss_series(HypergeometricParams(a, b, c, z2), ctx).value
    y1 = prefactor * (-1) ** n * mp.power(1 + t, x) * f1
    y2 = prefactor * mp.power(1 - t, x) * f2
    return y1, y2


def linear_solution(c1, c2, params: RiccatiParams, n_max: int,
                    ctx: Optional[PrecisionContext] = None) -> LinearSolution:
    """
    Evaluate y_0..y_{n_max} for the combination (c1, c2).

    Each y_n is evaluated directly from the series, not by recurrence.
    """
    ctx = ctx or PrecisionContext()
    c1 = ctx.mpf(c1)
    c2 = ctx.mpf(c2)
    basis = [basis_values(n, params, ctx) for n in range(n_max + 1)]
    y = [c1 * y1 + c2 * y2 for y1, y2 in basis]
    return LinearSolution(c1=c1, c2=c2, y=y, params=params, basis=basis, bits=ctx.mantissa_bits)


def separatrix_coefficients(params: RiccatiParams, ctx: Optional[PrecisionContext] = None,
                            p0=None) -> Tuple[Real, Real]:
    """
    (c1, c2) whose linear solution reproduces the Riccati trajectory from p0.

    With rho = p0 - t g_0 the Ansatz requires y_1 = rho y_0, giving
    c1/c2 = -(Y2_1 - rho Y2_0) / (Y1_1 - rho Y1_0). c2 is normalised to 1.

    Args:
        params: (gamma, alpha)
        ctx: Precision context
        p0: Initial value (defaults to p0_closed)
    """
    ctx = ctx or PrecisionContext()
    p0 = p0_closed(params, ctx) if p0 is None else ctx.mpf(p0)
    t = params.t(ctx)
    rho = p0 - t * g_coeff(0, params.gamma_value(ctx), ctx)
    y1_0, y2_0 = basis_values(0, params, ctx)
    y1_1, y2_1 = basis_values(1, params, ctx)
    c1 = -(y2_1 - rho * y2_0) / (y1_1 - rho * y1_0)
    return c1, ctx.mpf(1)
