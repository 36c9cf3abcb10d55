"""
(P, Q) dynamical system for radius ratios along a vertical line z = N + iM.

With P = R_{z+1}/R_{z-i} and Q = R_z/R_{z-i}, the radius equations become
a first-order map (P_{N,M}, Q_{N,M}) -> (P_{N,M+1}, Q_{N,M+1}). Embedded
patterns with gamma < 1 keep the orbit inside

    D0 = {P > 0, 0 <= Q <= F(P)}

where F is the non-negative root of F^2 - P + F(1-P)cos(alpha) = 0 on
[0, 1] and F = 1 beyond.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, List, Optional, Tuple

from ..errors import ConfigError, StepSingular
from ..lattice.precision import PrecisionContext, Real

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PainleveParams:
    """Parameters of the system on the line with fixed N."""
    gamma: float
    alpha: float
    N: int = 0
    alpha_pi: Optional[float] = None

    def __post_init__(self):
        if not 0 < float(self.gamma) < 2:
            raise ConfigError(f"gamma must lie in (0, 2), got {self.gamma}")
        if not 0 < float(self.alpha) < math.pi:
            raise ConfigError(f"alpha must lie in (0, pi), got {self.alpha}")
        if self.N < 0:
            raise ConfigError(f"N must be >= 0, got {self.N}")

    @classmethod
    def from_pi(cls, gamma: float, alpha_pi: float, N: int = 0) -> 'PainleveParams':
        return cls(gamma=gamma, alpha=alpha_pi * math.pi, N=N, alpha_pi=alpha_pi)

    def alpha_value(self, ctx: PrecisionContext) -> Real:
        if self.alpha_pi is not None:
            return ctx.mpf(self.alpha_pi) * ctx.pi
        return ctx.mpf(self.alpha)

    def t(self, ctx: PrecisionContext) -> Real:
        return ctx.mp.cos(self.alpha_value(ctx))

    def dual(self) -> 'PainleveParams':
        """Same line and angle with gamma replaced by 2 - gamma."""
        return PainleveParams(gamma=2 - self.gamma, alpha=self.alpha, N=self.N, alpha_pi=self.alpha_pi)


@dataclass(frozen=True)
class PQState:
    """State (P_{N,M}, Q_{N,M})."""
    P: Real
    Q: Real
    M: int

    def S(self, t) -> Real:
        """S = Q^2 - P + Q(1-P)cos(alpha)."""
        return self.Q * self.Q - self.P + self.Q * (1 - self.P) * t


class Domain(Enum):
    """Regions of the (P, Q) plane."""
    D0 = "D0"
    UPPER = "Du"
    LOWER = "Dd"
    FORBIDDEN = "Df"


@dataclass
class PainleveTrajectory:
    """Orbit of one seed with its domain history."""
    params: PainleveParams
    states: List[PQState] = field(default_factory=list)
    domains: List[Domain] = field(default_factory=list)
    singular_at: Optional[int] = None

    @property
    def exit_M(self) -> Optional[int]:
        """First M whose state is outside D0 (None if it never left)."""
        for state, dom in zip(self.states, self.domains):
            if dom is not Domain.D0:
                return state.M
        return None

    def to_rows(self) -> List[tuple]:
        return [(s.M, s.P, s.Q, d.value) for s, d in zip(self.states, self.domains)]


def F_boundary(P, alpha, ctx: Optional[PrecisionContext] = None) -> Real:
    """
    Upper edge F(P) of D0.

    Args:
        P: Non-negative P
        alpha: Intersection angle (radians, or an mpf of ctx)
    """
    ctx = ctx or PrecisionContext()
    P = ctx.mpf(P)
    if P >= 1:
        return ctx.mpf(1)
    t = ctx.mp.cos(ctx.mpf(alpha))
    return _F_from_t(P, t, ctx)


def _F_from_t(P, t, ctx: PrecisionContext) -> Real:
    if P >= 1:
        return ctx.mpf(1)
    u = (1 - P) * t
    return (-u + ctx.mp.sqrt(u * u + 4 * P)) / 2


def classify(state: PQState, t, ctx: PrecisionContext) -> Domain:
    """Domain label of a state for t = cos(alpha)."""
    P, Q = state.P, state.Q
    if Q < 0:
        return Domain.LOWER
    if P <= 0:
        return Domain.FORBIDDEN
    if Q > _F_from_t(P, t, ctx):
        return Domain.UPPER
    return Domain.D0


def in_D0(s: PQState, alpha, ctx: Optional[PrecisionContext] = None) -> bool:
    ctx = ctx or PrecisionContext()
    return s.P > 0 and 0 <= s.Q <= F_boundary(s.P, alpha, ctx)


def in_Du(s: PQState, alpha, ctx: Optional[PrecisionContext] = None) -> bool:
    ctx = ctx or PrecisionContext()
    return s.P > 0 and s.Q > F_boundary(s.P, alpha, ctx)


def in_Dd(s: PQState, alpha=None, ctx: Optional[PrecisionContext] = None) -> bool:
    return s.Q < 0


def in_Df(s: PQState, alpha=None, ctx: Optional[PrecisionContext] = None) -> bool:
    return s.P <= 0 and s.Q >= 0


def painleve_step(s: PQState, params: PainleveParams,
                  ctx: Optional[PrecisionContext] = None) -> PQState:
    """
    Advance (P_{N,M}, Q_{N,M}) to M+1.

    Raises:
        StepSingular: if the Q or P denominator vanishes relative to its terms
    """
    ctx = ctx or PrecisionContext()
    t = params.t(ctx)
    g = ctx.mpf(params.gamma)
    N, M = params.N, s.M
    P, Q = ctx.mpf(s.P), ctx.mpf(s.Q)
    S = Q * Q - P + Q * (1 - P) * t

    left = (M + N) * S
    right = (M - N) * (1 + P) * (P - Q * t)
    q_den = Q * (left - right)
    if abs(q_den) <= ctx.eps * abs(Q) * (abs(left) + abs(right)) or q_den == 0:
        raise StepSingular("Q", M)
    Q1 = ((N - M) * Q * (1 + P) * (Q - P * t) - (M + N) * P * S) / q_den

    a = (2 * (N + 1) - g) * P
    b = (2 * (M + 1) - g) * Q * Q1
    p_den = a + b
    if abs(p_den) <= ctx.eps * (abs(a) + abs(b)) or p_den == 0:
        raise StepSingular("P", M)
    P1 = ((2 * M + g) * P + (2 * N + g) * Q * Q1) / p_den
    return PQState(P=P1, Q=Q1, M=M + 1)


def initial_state(params: PainleveParams, q, ctx: Optional[PrecisionContext] = None) -> PQState:
    """Seed at M = N+1: P = g_N(gamma), Q = q."""
    ctx = ctx or PrecisionContext()
    g = ctx.mpf(params.gamma)
    N = params.N
    return PQState(P=(2 * N + g) / (2 * (N + 1) - g), Q=ctx.mpf(q), M=N + 1)


def trajectory(params: PainleveParams, q, M_max: int,
               ctx: Optional[PrecisionContext] = None,
               stop_on_exit: bool = False) -> PainleveTrajectory:
    """
    Orbit from the seed (g_N, q) up to M_max.

    Args:
        params: Line and parameters
        q: Seed Q_{N,N+1}
        M_max: Last M to compute
        ctx: Precision context
        stop_on_exit: Stop at the first state outside D0
    """
    ctx = ctx or PrecisionContext()
    t = params.t(ctx)
    traj = PainleveTrajectory(params=params)
    state = initial_state(params, q, ctx)
    while True:
        dom = classify(state, t, ctx)
        traj.states.append(state)
        traj.domains.append(dom)
        if state.M >= M_max or (stop_on_exit and dom is not Domain.D0):
            break
        try:
            state = painleve_step(state, params, ctx)
        except StepSingular:
            traj.singular_at = state.M
            break
    return traj


def exit_index(params: PainleveParams, q, M_max: int,
               ctx: Optional[PrecisionContext] = None) -> int:
    """
    First M at which the orbit from q leaves D0 (M_max + 1 if it never does).

    A singular step counts as leaving at the next M.
    """
    ctx = ctx or PrecisionContext()
    t = params.t(ctx)
    state = initial_state(params, q, ctx)
    while True:
        if classify(state, t, ctx) is not Domain.D0:
            return state.M
        if state.M >= M_max:
            return M_max + 1
        try:
            state = painleve_step(state, params, ctx)
        except StepSingular:
            return state.M + 1


def state_from_radii(radius: Callable[[int, int], Real], N: int, M: int) -> PQState:
    """(P_{N,M}, Q_{N,M}) from a radius lookup R(N, M)."""
    below = radius(N, M - 1)
    return PQState(P=radius(N + 1, M) / below, Q=radius(N, M) / below, M=M)


def radii_residuals(radius: Callable[[int, int], Real], params_for: Callable[[int], PainleveParams],
                    points: List[Tuple[int, int]], ctx: PrecisionContext) -> List[Tuple[Tuple[int, int], Real]]:
    """
    Relative residual of one step against the radii at each (N, M).

    Args:
        radius: R(N, M) lookup
        params_for: PainleveParams for a given N
        points: (N, M) where both the state and its successor are defined
        ctx: Precision context

    Returns:
        [((N, M), max(|dP|/|P'|, |dQ|/|Q'|)), ...]
    """
    out = []
    for N, M in points:
        here = state_from_radii(radius, N, M)
        there = state_from_radii(radius, N, M + 1)
        stepped = painleve_step(here, params_for(N), ctx)
        err = max(abs(stepped.P - there.P) / abs(there.P), abs(stepped.Q - there.Q) / abs(there.Q))
        out.append(((N, M), err))
    return out
