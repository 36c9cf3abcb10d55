"""
Radius fields on the sublattice V.

A field R_z, z = N + iM, comes from a pattern (``extract_radius_field``)
or is evolved row by row from its seeds (``radii_evolution``) using

    square:  -M R_z R_{z+1} + (N+1) R_{z+1} R_{z+1+i} + (M+1) R_{z+1+i} R_{z+i}
             - N R_{z+i} R_z = gamma/2 (R_z + R_{z+1+i})(R_{z+1} + R_{z+i})

    Ri:      (N+M)(R_{z+i} + R_{z+1}) A(R_{z-i}) + (M-N)(R_{z-i} + R_{z+1}) A(R_{z+i}) = 0
             A(x) = R_z^2 - R_{z+1} x + cos(alpha) R_z (x - R_{z+1})

The square equation holds on V_l, the Ri equation on the interior of V.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..errors import ConfigError, NotAKite, SignLoss
from ..lattice.indices import in_V, in_Vl, in_Vrint, to_sublattice
from ..lattice.precision import PrecisionContext, Real
from ..riccati.recursion import RiccatiParams, p0_closed, riccati_iterate
from .axis import axis_radii
from .models import GridMap, PatternConfig, PatternMode, RadiusField

logger = logging.getLogger(__name__)


@dataclass
class FieldResiduals:
    """Worst relative residuals of both radius equations over a field."""
    max_square: Real
    square_at: Optional[Tuple[int, int]]
    max_ri: Real
    ri_at: Optional[Tuple[int, int]]
    checked: int
    excluded: int

    @property
    def worst(self) -> Real:
        return max(self.max_square, self.max_ri)

    def to_dict(self) -> dict:
        return {
            'max_square': float(self.max_square),
            'square_at': self.square_at,
            'max_ri': float(self.max_ri),
            'ri_at': self.ri_at,
            'checked': self.checked,
            'excluded': self.excluded,
        }


def initial_radii(config: PatternConfig) -> Tuple[Real, Real]:
    """
    Seeds (R_0, R_i).

    zgamma: R_0 = 1, R_i = sin(beta/2) / sin(alpha - beta/2).
    z2:     R_0 = 0, R_i = sin(alpha) / alpha.
    """
    ctx = config.ctx
    mp = ctx.mp
    alpha = config.alpha_value()
    if config.mode is PatternMode.ZGAMMA:
        beta = config.beta_value()
        return ctx.mpf(1), mp.sin(beta / 2) / mp.sin(alpha - beta / 2)
    if config.mode is PatternMode.Z2:
        return ctx.mpf(0), mp.sin(alpha) / alpha
    raise ConfigError(f"mode {config.mode.value} has no radius seeds")


def _checked(value: Real, z: Tuple[int, int], ctx: PrecisionContext) -> Real:
    if not ctx.is_finite(value) or value <= 0:
        raise SignLoss(z, value)
    return value


def _solve_ri(R: dict, N: int, M: int, t: Real, ctx: PrecisionContext) -> Real:
    """R_{z+i} from the Ri equation at z = N + iM."""
    Rz, R1, Rm = R[(N, M)], R[(N + 1, M)], R[(N, M - 1)]
    A = Rz * Rz - R1 * Rm + t * Rz * (Rm - R1)
    B = (M - N) * (Rm + R1)
    den = (N + M) * A + B * (t * Rz - R1)
    if den == 0:
        raise SignLoss((N, M + 1), ctx.mp.inf)
    return -((N + M) * A * R1 + B * Rz * (Rz - t * R1)) / den


def _solve_square(R: dict, N: int, M: int, g: Real, ctx: PrecisionContext) -> Real:
    """R_{z+1+i} from the square equation at z = N + iM."""
    Rz, R1, Ri = R[(N, M)], R[(N + 1, M)], R[(N, M + 1)]
    h = g / 2
    den = (N + 1 - h) * R1 + (M + 1 - h) * Ri
    if den == 0:
        raise SignLoss((N + 1, M + 1), ctx.mp.inf)
    return Rz * ((M + h) * R1 + (N + h) * Ri) / den


def _left_edge(Rz: Real, R1: Real, t: Real, z: Tuple[int, int], ctx: PrecisionContext) -> Real:
    """R_{z+i} at z = -M + iM, where the Ri equation loses its z-i term."""
    den = R1 - t * Rz
    if den == 0:
        raise SignLoss(z, ctx.mp.inf)
    return Rz * (Rz - t * R1) / den


def radii_evolution(R0, Ri, config: PatternConfig, M_max: int,
                    diagonal: Optional[List[Real]] = None) -> RadiusField:
    """
    Evolve a radius field from its seeds up to row M_max.

    Row M+1 is filled left to right: the left edge by the degenerate Ri
    equation, the interior by the Ri equation at z - i, and the right edge
    next to the diagonal by the square equation.

    Args:
        R0: R at z = 0 (0 only for z2)
        Ri: R at z = i
        config: Supplies gamma, alpha and the precision
        M_max: Last row
        diagonal: R at z = +-K + iK for K = 0..M_max (default r_K * R0,
            or K for z2)

    Raises:
        SignLoss: at the first non-positive radius
    """
    ctx = config.ctx
    R0, Ri = ctx.mpf(R0), ctx.mpf(Ri)
    if R0 < 0 or Ri <= 0:
        raise ConfigError(f"seeds must be positive, got R0={R0}, Ri={Ri}")
    g = ctx.mpf(config.gamma)
    t = config.t()
    if diagonal is None:
        if config.mode is PatternMode.Z2:
            diagonal = [ctx.mpf(K) for K in range(M_max + 1)]
        else:
            diagonal = [r * R0 for r in axis_radii(config.gamma, M_max, ctx).values]

    R = {(0, 0): R0}
    if M_max >= 1:
        R[(-1, 1)] = R[(1, 1)] = ctx.mpf(diagonal[1])
        R[(0, 1)] = Ri
    for M in range(1, M_max):
        R[(-M - 1, M + 1)] = R[(M + 1, M + 1)] = ctx.mpf(diagonal[M + 1])
        z = (-M, M + 1)
        R[z] = _checked(_left_edge(R[(-M, M)], R[(-M + 1, M)], t, z, ctx), z, ctx)
        for N in range(-M + 1, M):
            R[(N, M + 1)] = _checked(_solve_ri(R, N, M, t, ctx), (N, M + 1), ctx)
        R[(M, M + 1)] = _checked(_solve_square(R, M - 1, M, g, ctx), (M, M + 1), ctx)
        logger.debug(f"radii row M={M + 1} done")

    kind = 'z2' if config.mode is PatternMode.Z2 else 'zgamma'
    field = RadiusField(R=R, config=config, M_max=M_max, gamma=g, kind=kind)
    logger.info(f"Evolved {len(R)} radii up to M={M_max} at {ctx.mantissa_bits} bits")
    return field


def border_radii(gamma, alpha, n_max: int, ctx: Optional[PrecisionContext] = None,
                 alpha_pi: Optional[float] = None) -> List[Real]:
    """
    R_n at z = n + i(n+1) as p_n r_n, from the positive Riccati solution.

    Raises:
        SignLoss: if the Riccati iteration loses positivity before n_max
    """
    ctx = ctx or PrecisionContext()
    params = (RiccatiParams.from_pi(gamma, alpha_pi) if alpha_pi is not None
              else RiccatiParams(gamma=gamma, alpha=alpha))
    traj = riccati_iterate(p0_closed(params, ctx), params, n_max, ctx)
    if traj.exit_index is not None or len(traj.p) < n_max + 1:
        n = traj.exit_index if traj.exit_index is not None else len(traj.p)
        raise SignLoss((n, n + 1), traj.p[-1])
    r = axis_radii(gamma, n_max, ctx).values
    return [p * rn for p, rn in zip(traj.p, r)]


def z2_field(alpha, M_max: int, ctx: Optional[PrecisionContext] = None,
             alpha_pi: Optional[float] = None) -> RadiusField:
    """
    Radius field of Z^2: R_0 = 0, R_{1+i} = 1, R_i = sin(alpha)/alpha.

    R_0 = 0 is an exact boundary value; the diagonal radii are r_K = K.
    """
    ctx = ctx or PrecisionContext()
    config = PatternConfig(gamma=2.0, alpha=alpha, alpha_pi=alpha_pi, size=max(2 * M_max, 1),
                           mode=PatternMode.Z2, precision=ctx)
    R0, Ri = initial_radii(config)
    return radii_evolution(R0, Ri, config, M_max)


def _reciprocal(value: Real, ctx: PrecisionContext) -> Real:
    if value == 0:
        return ctx.mp.inf
    if ctx.mp.isinf(value):
        return ctx.mpf(0)
    return 1 / value


def dual_field(field: RadiusField) -> RadiusField:
    """
    Pointwise 1/R with gamma replaced by 2 - gamma (0 and inf swap).

    The dual of Z^2 is Log. Dualising a dual returns the original field.
    """
    if field.dual_of is not None:
        return field.dual_of
    ctx = field.config.ctx
    kind = {'z2': 'log', 'log': 'z2'}.get(field.kind, field.kind)
    R = {k: _reciprocal(v, ctx) for k, v in field.R.items()}
    return RadiusField(R=R, config=field.config, M_max=field.M_max, gamma=2 - field.gamma,
                       kind=kind, meta=dict(field.meta), dual_of=field)


def extract_radius_field(grid: GridMap, tol: Optional[float] = None) -> RadiusField:
    """
    Radii as the mean incident edge length at every even vertex.

    Raises:
        NotAKite: if the relative spread of those lengths exceeds tol
    """
    config = grid.config
    ctx = config.ctx
    tol = config.kite_tol if tol is None else tol
    v = grid.values
    floor = ctx.eps * max(grid.scale(), 1)
    R = {}
    worst, worst_at = ctx.mpf(0), None
    for n, m in grid.keys():
        if (n + m) % 2:
            continue
        f = v[(n, m)]
        lengths = [abs(v[k] - f) for k in ((n + 1, m), (n - 1, m), (n, m + 1), (n, m - 1)) if k in v]
        if not lengths:
            continue
        mean = sum(lengths) / len(lengths)
        spread = (max(lengths) - min(lengths)) / mean if mean > floor else ctx.mpf(0)
        if worst_at is None or spread > worst:
            worst, worst_at = spread, (n, m)
        R[to_sublattice(n, m)] = mean if mean > floor else ctx.mpf(0)

    if worst > tol:
        raise NotAKite(worst_at, float(worst))
    M_max = max(M for _, M in R) if R else 0
    field = RadiusField(R=R, config=config, M_max=M_max, gamma=ctx.mpf(config.gamma),
                        kind=config.mode.value, meta={'kite_spread': worst, 'kite_at': worst_at})
    logger.debug(f"Extracted {len(R)} radii, kite spread {float(worst):.3e}")
    return field


def _boundary_value(value: Real, ctx: PrecisionContext) -> bool:
    return value == 0 or ctx.mp.isinf(value)


def square_residual(field: RadiusField, N: int, M: int) -> Optional[Real]:
    """
    Relative residual of the square equation at z = N + iM in V_l.

    R_z outside V enters with zero weight; its coefficient vanishes there.
    Returns None when a neighbour is missing or a boundary value (0, inf)
    is involved.
    """
    ctx = field.config.ctx
    if not in_Vl(N, M):
        return None
    others = [field.get(*k) for k in ((N + 1, M), (N, M + 1), (N + 1, M + 1))]
    if any(x is None for x in others):
        return None
    Rz = field.get(N, M)
    if Rz is None:
        if in_V(N, M):
            return None
        Rz = ctx.mpf(0)
    elif _boundary_value(Rz, ctx):
        return None
    if any(_boundary_value(x, ctx) for x in others):
        return None
    R1, Ri, X = others
    h = field.gamma / 2
    terms = [-M * Rz * R1, (N + 1) * R1 * X, (M + 1) * X * Ri, -N * Ri * Rz,
             -h * (Rz + X) * (R1 + Ri)]
    scale = sum(abs(x) for x in terms)
    return abs(sum(terms)) / scale if scale else ctx.mpf(0)


def ri_residual(field: RadiusField, N: int, M: int) -> Optional[Real]:
    """Relative residual of the Ri equation at z = N + iM in the interior of V."""
    ctx = field.config.ctx
    if not in_Vrint(N, M):
        return None
    vals = [field.get(*k) for k in ((N, M), (N + 1, M), (N, M - 1), (N, M + 1))]
    if any(x is None or _boundary_value(x, ctx) for x in vals):
        return None
    Rz, R1, Rm, X = vals
    t = field.config.t()
    at = abs(t)
    A = Rz * Rz - R1 * Rm + t * Rz * (Rm - R1)
    A2 = Rz * Rz - R1 * X + t * Rz * (X - R1)
    main = (N + M) * (X + R1) * A + (M - N) * (Rm + R1) * A2
    scale = (abs(N + M) * (X + R1) * (Rz * Rz + R1 * Rm + at * Rz * (Rm + R1))
             + abs(M - N) * (Rm + R1) * (Rz * Rz + R1 * X + at * Rz * (X + R1)))
    return abs(main) / scale if scale else ctx.mpf(0)


def field_residuals(field: RadiusField) -> FieldResiduals:
    """Both residuals over every point of the field where they are defined."""
    ctx = field.config.ctx
    sq, sq_at = ctx.mpf(0), None
    ri, ri_at = ctx.mpf(0), None
    checked = excluded = 0
    for M in range(field.M_max + 1):
        for N in range(-M - 1, M + 1):
            if in_Vl(N, M) and (N + 1, M + 1) in field:
                res = square_residual(field, N, M)
                if res is None:
                    excluded += 1
                else:
                    checked += 1
                    if sq_at is None or res > sq:
                        sq, sq_at = res, (N, M)
            if in_Vrint(N, M) and (N, M + 1) in field:
                res = ri_residual(field, N, M)
                if res is None:
                    excluded += 1
                else:
                    checked += 1
                    if ri_at is None or res > ri:
                        ri, ri_at = res, (N, M)
    return FieldResiduals(max_square=sq, square_at=sq_at, max_ri=ri, ri_at=ri_at,
                          checked=checked, excluded=excluded)


def radius_lookup(field: RadiusField):
    """R(N, M) callable over a field, for the Painleve helpers."""
    def radius(N: int, M: int) -> Real:
        return field.R[(N, M)]
    return radius


def max_relative_difference(a: RadiusField, b: RadiusField, M_max: Optional[int] = None) -> Real:
    """Largest |R_a - R_b| / R_b over common finite positive labels with M <= M_max."""
    ctx = a.config.ctx
    worst = ctx.mpf(0)
    for key, value in a.items():
        if M_max is not None and key[1] > M_max:
            continue
        other = b.R.get(key)
        if other is None or _boundary_value(other, ctx) or _boundary_value(value, ctx):
            continue
        worst = max(worst, abs(value - other) / other)
    return worst


def is_symmetric(field: RadiusField, tol: float) -> bool:
    """R_{N+iM} = R_{-N+iM} within tol (relative)."""
    for (N, M), value in field.items():
        mirror = field.R.get((-N, M))
        if mirror is None or _boundary_value(value, field.config.ctx):
            continue
        if abs(value - mirror) > tol * abs(value):
            return False
    return True

