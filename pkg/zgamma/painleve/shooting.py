"""
Separatrix shooting for the (P, Q) system.

The seeds q in [0, F(g_N)] whose orbits stay in D0 up to M form a union of
closed segments that shrinks as M grows. Each pass scans a uniform seed
grid over the current bracket, records how long every orbit survives, and
keeps the widest run of longest survivors. The new bracket is spanned by the
failing neighbours of that run, so brackets are nested.

For gamma > 1 the sign condition flips; the dual system (2 - gamma) is shot
instead and the reported seed is inverted.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..config import Q_TOL, SEED_GRID, SEED_GRID_REFINEMENTS, SHOOT_MAX_PASSES
from ..errors import BracketLost, ConfigError
from ..lattice.precision import PrecisionContext, Real
from .system import PainleveParams, _F_from_t, exit_index, initial_state

logger = logging.getLogger(__name__)


@dataclass
class ShootingResult:
    """
    Bracket on the separatrix seed.

    ``q_lo``/``q_hi`` are the outermost seeds of the surviving run and
    ``outer_lo``/``outer_hi`` the enclosing failing neighbours (or the
    initial interval ends). All four are in the shot variable; when
    ``dual`` is set that is the seed of the 2 - gamma system.
    """
    q_lo: Real
    q_hi: Real
    outer_lo: Real
    outer_hi: Real
    M_reached: int
    iterations: int
    converged: bool
    dual: bool = False
    history: List[Tuple[int, Real]] = field(default_factory=list)

    @property
    def width(self) -> Real:
        return self.outer_hi - self.outer_lo

    @property
    def q_estimate(self) -> Real:
        """Seed estimate for the requested gamma."""
        mid = (self.q_lo + self.q_hi) / 2
        return 1 / mid if self.dual else mid

    def bracket(self) -> Tuple[Real, Real]:
        """Outer bracket in the requested gamma's variable."""
        if not self.dual:
            return self.outer_lo, self.outer_hi
        hi = 1 / self.outer_lo if self.outer_lo > 0 else float('inf')
        return 1 / self.outer_hi, hi

    def contains(self, value, slack=0) -> bool:
        lo, hi = self.bracket()
        return lo - slack <= value <= hi + slack

    def to_dict(self) -> dict:
        return {
            'q_lo': str(self.q_lo),
            'q_hi': str(self.q_hi),
            'outer_lo': str(self.outer_lo),
            'outer_hi': str(self.outer_hi),
            'M_reached': self.M_reached,
            'iterations': self.iterations,
            'converged': self.converged,
            'dual': self.dual,
            'q_estimate': str(self.q_estimate),
        }


def _linspace(lo, hi, k: int) -> list:
    step = (hi - lo) / (k - 1)
    return [lo + i * step for i in range(k)] if k > 1 else [lo]


def _widest_run(qs: list, exits: List[int], level: int) -> Tuple[int, int]:
    best = None
    i = 0
    while i < len(qs):
        if exits[i] != level:
            i += 1
            continue
        j = i
        while j + 1 < len(qs) and exits[j + 1] == level:
            j += 1
        if best is None or qs[j] - qs[i] > qs[best[1]] - qs[best[0]]:
            best = (i, j)
        i = j + 1
    return best


def separatrix_bisect(params: PainleveParams, M_max: int, q_tol: float = Q_TOL,
                      ctx: Optional[PrecisionContext] = None,
                      seed_grid: int = SEED_GRID) -> ShootingResult:
    """
    Bracket the seed q_N whose orbit stays in D0 for all M up to M_max.

    Args:
        params: Line N and parameters
        M_max: Last M checked, > N
        q_tol: Target width of the outer bracket
        ctx: Precision context
        seed_grid: Seeds per pass

    Returns:
        ShootingResult; ``converged`` is False if the bracket stalled above q_tol

    Raises:
        BracketLost: if refinement stalls before M_max (precision exhausted)
    """
    ctx = ctx or PrecisionContext()
    if M_max <= params.N:
        raise ConfigError(f"M_max must exceed N={params.N}, got {M_max}")
    dual = params.gamma > 1
    shot = params.dual() if dual else params
    t = shot.t(ctx)
    tol = ctx.mpf(q_tol)

    start = initial_state(shot, 0, ctx)
    lo = ctx.mpf(0)
    hi = _F_from_t(start.P, t, ctx)
    logger.info(f"Shooting N={params.N}, gamma={params.gamma}{' (dual)' if dual else ''} "
                f"on [0, {float(hi):.6g}] up to M={M_max}")

    run: list = []
    level_prev = params.N + 1
    grid = seed_grid
    stalls = 0
    history: List[Tuple[int, Real]] = []
    iterations = 0
    converged = False
    inner = (lo, hi)
    M_reached = params.N + 1

    while iterations < SHOOT_MAX_PASSES:
        qs = sorted(set(_linspace(lo, hi, grid)) | set(run))
        exits = [exit_index(shot, q, M_max, ctx) for q in qs]
        level = max(exits)
        s, e = _widest_run(qs, exits, level)
        new_lo = qs[s - 1] if s > 0 else lo
        new_hi = qs[e + 1] if e + 1 < len(qs) else hi
        iterations += 1

        progress = level > level_prev or (new_hi - new_lo) * 2 < (hi - lo)
        lo, hi = new_lo, new_hi
        run = qs[s:e + 1]
        inner = (qs[s], qs[e])
        M_reached = min(level - 1, M_max)
        level_prev = max(level, level_prev)
        history.append((M_reached, hi - lo))
        logger.debug(f"pass {iterations}: M={M_reached} bracket=[{lo}, {hi}] grid={len(qs)}")

        if M_reached >= M_max and hi - lo <= tol:
            converged = True
            break
        if progress:
            stalls = 0
            grid = seed_grid
            continue
        if M_reached >= M_max:
            # Every seed left survives to M_max; the segment is genuinely this wide.
            break
        stalls += 1
        if stalls > SEED_GRID_REFINEMENTS:
            raise BracketLost(M_reached + 1, ctx.mantissa_bits)
        grid *= 4

    if not converged:
        logger.warning(f"Bracket width {float(hi - lo):.3e} above q_tol at M={M_reached}")

    return ShootingResult(
        q_lo=inner[0],
        q_hi=inner[1],
        outer_lo=lo,
        outer_hi=hi,
        M_reached=M_reached,
        iterations=iterations,
        converged=converged,
        dual=dual,
        history=history,
    )
