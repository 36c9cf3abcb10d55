"""
Truncated Gauss hypergeometric series F(a, b; c; z) for real |z| < 1.

The series and its term-wise derivative are summed together under one
truncation rule. Termination is not tested while k < -c, since for negative
half-integer c the terms grow until k passes -c.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from ..config import POLE_FACTOR, SERIES_MAX_TERMS, SERIES_TOL_FACTOR
from ..errors import ConfigError, NoConvergence, PoleError
from ..lattice.precision import PrecisionContext, Real

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HypergeometricParams:
    """Parameters of one series evaluation."""
    a: float
    b: float
    c: float
    z: float
    tol: Optional[float] = None
    max_terms: int = SERIES_MAX_TERMS


@dataclass
class SeriesResult:
    """Partial sum with its convergence bookkeeping."""
    value: Real
    derivative: Optional[Real]
    terms: int
    converged: bool

    def __float__(self) -> float:
        return float(self.value)


def _check_params(p: HypergeometricParams, ctx: PrecisionContext):
    c = ctx.mpf(p.c)
    if c <= 0:
        nearest = ctx.mp.nint(c)
        if abs(c - nearest) <= POLE_FACTOR * ctx.eps * max(1, abs(c)) and -nearest <= p.max_terms:
            raise PoleError(f"c = {p.c} is a non-positive integer; (c)_k vanishes")
    if abs(ctx.mpf(p.z)) >= 1:
        raise ConfigError(f"Series path requires |z| < 1, got z = {p.z}")


def gauss_series(p: HypergeometricParams, ctx: Optional[PrecisionContext] = None,
                 derivative: bool = False, strict: bool = True) -> SeriesResult:
    """
    Sum F(a, b; c; z) (and optionally dF/dz) to relative tolerance.

    Args:
        p: Series parameters
        ctx: Precision context (53-bit if omitted)
        derivative: Also sum the term-wise derivative
        strict: Raise NoConvergence instead of returning an unconverged result

    Returns:
        SeriesResult with the partial sums and a convergence flag
    """
    ctx = ctx or PrecisionContext()
    _check_params(p, ctx)
    a, b, c, z = (ctx.mpf(v) for v in (p.a, p.b, p.c, p.z))
    tol = ctx.mpf(p.tol) if p.tol is not None else SERIES_TOL_FACTOR * ctx.eps
    absz = abs(z)

    coef = ctx.mpf(1)
    zpow_prev = ctx.mpf(1)   # z^(k-1)
    total = ctx.mpf(1)
    dtotal = ctx.mpf(0)
    converged = False
    k = 0

    while k < p.max_terms:
        coef *= (a + k) * (b + k) / ((c + k) * (k + 1))
        k += 1
        if coef == 0:
            converged = True
            break
        term = coef * zpow_prev * z
        total += term
        if derivative:
            dterm = k * coef * zpow_prev
            dtotal += dterm
        zpow_prev *= z

        if k <= -c:
            continue
        rho = max(abs((a + k) * (b + k) / ((c + k) * (k + 1))) * absz, absz)
        if rho >= 1:
            continue
        done = abs(term) * rho / (1 - rho) <= tol * abs(total)
        if derivative and done:
            rho_d = rho * (k + 1) / k
            done = rho_d < 1 and abs(dterm) * rho_d / (1 - rho_d) <= tol * abs(dtotal)
        if done:
            converged = True
            break

    if not converged:
        if strict:
            raise NoConvergence(f"F({p.a}, {p.b}; {p.c}; {p.z}) did not reach tolerance", k, total)
        logger.warning(f"F({p.a}, {p.b}; {p.c}; {p.z}) truncated at {k} terms")

    return SeriesResult(
        value=total,
        derivative=dtotal if derivative else None,
        terms=k,
        converged=converged,
    )


def hyp2f1(p: HypergeometricParams, ctx: Optional[PrecisionContext] = None,
           strict: bool = True) -> SeriesResult:
    """Gauss series value with a reached-tolerance flag."""
    return gauss_series(p, ctx, derivative=False, strict=strict)


def hyp2f1_reference(a, b, c, z, ctx: Optional[PrecisionContext] = None) -> Real:
    """mpmath's own 2F1, used as an independent oracle."""
    ctx = ctx or PrecisionContext()
    return ctx.mp.hyp2f1(ctx.mpf(a), ctx.mpf(b), ctx.mpf(c), ctx.mpf(z))


def s_coefficients(gamma) -> tuple:
    """(a, b, c) of the s-function: ((3-gamma)/2, (gamma-1)/2, 1/2)."""
    return (3 - gamma) / 2, (gamma - 1) / 2, 0.5


def s_series(gamma, z, ctx: Optional[PrecisionContext] = None,
             tol: Optional[float] = None) -> Real:
    """s(z) = F((3-gamma)/2, (gamma-1)/2; 1/2; z)."""
    ctx = ctx or PrecisionContext()
    g = ctx.mpf(gamma)
    a, b, c = s_coefficients(g)
    return gauss_series(HypergeometricParams(a, b, c, z, tol=tol), ctx).value


def s_series_pochhammer(gamma, z, ctx: Optional[PrecisionContext] = None,
                        n_terms: int = 400) -> Real:
    """
    Direct summation of sum_k (a)_k (b)_k / ((c)_k k!) z^k with mpmath
    rising factorials, independent of the ratio recurrence in gauss_series.
    """
    ctx = ctx or PrecisionContext()
    mp = ctx.mp
    g = ctx.mpf(gamma)
    a, b, c = s_coefficients(g)
    z = ctx.mpf(z)
    return mp.fsum(
        mp.rf(a, k) * mp.rf(b, k) / (mp.rf(c, k) * mp.factorial(k)) * z ** k
        for k in range(n_terms)
    )


def gauss_equation_residual(p: HypergeometricParams, ctx: Optional[PrecisionContext] = None,
                            h: Optional[float] = None) -> Real:
    """
    Residual z(1-z)F'' + [c - (a+b+1)z]F' - abF with central differences.

    Args:
        p: Series parameters (z is the evaluation point)
        ctx: Precision context
        h: Difference step (defaults to eps**(1/4))

    Returns:
        Absolute residual
    """
    ctx = ctx or PrecisionContext()
    a, b, c, z = (ctx.mpf(v) for v in (p.a, p.b, p.c, p.z))
    step = ctx.mpf(h) if h is not None else ctx.mp.root(ctx.eps, 4)

    def F(x):
        return gauss_series(HypergeometricParams(p.a, p.b, p.c, x, tol=p.tol,
                                                 max_terms=p.max_terms), ctx).value

    f0 = F(z)
    fp = F(z + step)
    fm = F(z - step)
    d1 = (fp - fm) / (2 * step)
    d2 = (fp - 2 * f0 + fm) / (step * step)
    return abs(z * (1 - z) * d2 + (c - (a + b + 1) * z) * d1 - a * b * f0)
