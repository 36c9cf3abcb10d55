"""
Generation coordinator: builds a pattern for a config, escalating precision
until the result is clean, then validates it.
"""

import logging
import time
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from typing import Callable, List, Optional, Tuple

from ..config import BRUTEFORCE_N_CAP, FIELD_RESIDUAL_FACTOR, PRECISION_LADDER, RESIDUAL_FACTOR
from ..errors import DegenerateQuad, NotAKite, SignLoss, ZGammaError
from ..geometry.checks import check_all, check_kites
from ..geometry.report import ValidationSummary
from .generator import cross_ratio_residual, generate_map
from .models import CirclePattern, GridMap, PatternConfig, PatternMode, RadiusField
from .radii import dual_field, extract_radius_field, field_residuals, z2_field
from .reconstruct import reconstruct_map

logger = logging.getLogger(__name__)


class GenerationState(Enum):
    """Coordinator state enumeration."""
    IDLE = "idle"
    GENERATING = "generating"
    ESCALATING = "escalating"
    VALIDATING = "validating"
    DONE = "done"
    ERROR = "error"


@dataclass
class GenerationProgress:
    """Current generation progress information."""
    state: GenerationState
    bits: int
    attempt: int
    total_attempts: int
    points: int = 0
    kite_spread: Optional[float] = None

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        return {
            'state': self.state.value,
            'bits': self.bits,
            'attempt': self.attempt,
            'total_attempts': self.total_attempts,
            'points': self.points,
            'kite_spread': self.kite_spread,
        }


@dataclass
class PatternResult:
    """Everything one generation run produced."""
    config: PatternConfig
    grid: Optional[GridMap] = None
    field: Optional[RadiusField] = None
    pattern: Optional[CirclePattern] = None
    validation: Optional[ValidationSummary] = None
    residuals: dict = dataclass_field(default_factory=dict)
    attempts: List[Tuple[int, str]] = dataclass_field(default_factory=list)
    wall_time: float = 0.0

    @property
    def bits(self) -> int:
        return self.config.ctx.mantissa_bits

    @property
    def passed(self) -> bool:
        return self.validation is None or self.validation.passed


class PatternCoordinator:
    """
    Runs one configuration through generation and validation.

    Precision ladder: the configured width first, then every wider rung of
    PRECISION_LADDER. A rung is rejected when propagation degenerates, a
    radius loses its sign, or the kite spread misses config.kite_tol.
    """

    def __init__(self, config: PatternConfig, ladder: Tuple[int, ...] = PRECISION_LADDER,
                 validate: bool = True, n_cap: int = BRUTEFORCE_N_CAP):
        """
        Initialize the coordinator.

        Args:
            config: Run parameters
            ladder: Mantissa widths tried after the configured one
            validate: Run the geometric checks after generation
            n_cap: Largest n+m for the pairwise embeddedness test
        """
        self.config = config
        self.validate = validate
        self.n_cap = n_cap
        start = config.ctx.mantissa_bits
        self._rungs = [start] + [b for b in ladder if b > start]

        self._state = GenerationState.IDLE
        self._attempt = 0
        self._bits = start
        self._points = 0
        self._kite_spread: Optional[float] = None

        # Callbacks
        self._on_progress: List[Callable[[GenerationProgress], None]] = []
        self._on_state_change: List[Callable[[GenerationState], None]] = []

    def generate(self) -> PatternResult:
        """
        Build, escalate and validate.

        Raises:
            ZGammaError: if every rung of the ladder fails
        """
        started = time.perf_counter()
        self._set_state(GenerationState.GENERATING)
        attempts: List[Tuple[int, str]] = []
        last_error: Optional[ZGammaError] = None
        result = None

        for k, bits in enumerate(self._rungs):
            self._attempt = k + 1
            self._bits = bits
            config = self.config if bits == self.config.ctx.mantissa_bits else self.config.with_bits(bits)
            if k:
                self._set_state(GenerationState.ESCALATING)
            try:
                candidate = self._build(config)
            except (DegenerateQuad, SignLoss, NotAKite) as e:
                logger.warning(f"{bits} bits rejected: {e}")
                attempts.append((bits, type(e).__name__))
                last_error = e
                continue
            verdict = self._accept(candidate)
            attempts.append((bits, verdict))
            result = candidate
            if verdict == 'accepted':
                break
            logger.warning(f"{bits} bits rejected: {verdict}")

        if result is None:
            self._set_state(GenerationState.ERROR)
            raise last_error
        result.attempts = attempts

        if result.field is None and result.grid is not None and result.config.mode is PatternMode.ZGAMMA:
            try:
                result.field = extract_radius_field(result.grid, tol=float('inf'))
            except ZGammaError as e:
                logger.warning(f"No radius field: {e}")
        if result.pattern is None and result.grid is not None and result.field is not None:
            result.pattern = CirclePattern.from_map(result.grid, result.field)

        self._summarise(result)
        if self.validate:
            self._set_state(GenerationState.VALIDATING)
            result.validation = check_all(result.grid, result.field, result.pattern, n_cap=self.n_cap)
            if not result.validation.passed:
                logger.warning("Validation failed: " +
                               "; ".join(str(r) for r in result.validation.reports if not r.passed))

        result.wall_time = time.perf_counter() - started
        self._set_state(GenerationState.DONE)
        logger.info(f"Generated {result.config.mode.value} at {result.bits} bits in {result.wall_time:.2f}s")
        return result

    def _build(self, config: PatternConfig) -> PatternResult:
        mode = config.mode
        if mode in (PatternMode.ZGAMMA, PatternMode.KAPPA):
            grid = generate_map(config)
            self._points = len(grid)
            self._notify_progress()
            return PatternResult(config=config, grid=grid)

        M_max = max(config.size // 2, 1)
        z2 = z2_field(config.alpha, M_max, config.ctx, alpha_pi=config.alpha_pi)
        if mode is PatternMode.LOG:
            self._points = len(z2)
            return PatternResult(config=config, field=dual_field(z2))
        grid = reconstruct_map(z2, config)
        self._points = len(grid)
        self._notify_progress()
        return PatternResult(config=config, grid=grid, field=z2)

    def _accept(self, result: PatternResult) -> str:
        config = result.config
        if result.grid is None or config.mode is PatternMode.KAPPA or config.is_skew:
            return 'accepted'
        report = check_kites(result.grid)
        self._kite_spread = report.worst_residual
        self._notify_progress()
        if report.passed:
            return 'accepted'
        return f"kite spread {report.worst_residual:.3e}"

    def _summarise(self, result: PatternResult):
        res = {}
        if result.grid is not None:
            if 'constraint_residual' in result.grid.meta:
                res['constraint_residual'] = float(result.grid.meta['constraint_residual'])
            if result.config.mode is not PatternMode.Z2:
                res['cross_ratio_residual'] = float(cross_ratio_residual(result.grid))
        if self._kite_spread is not None:
            res['kite_spread'] = self._kite_spread
        if result.field is not None:
            fr = field_residuals(result.field)
            res['square_residual'] = float(fr.max_square)
            res['ri_residual'] = float(fr.max_ri)
        result.residuals = res
        self._warn_residuals(result)

    def _warn_residuals(self, result: PatternResult):
        eps = float(result.config.ctx.eps)
        for name, value in result.residuals.items():
            if name == 'kite_spread':
                continue
            factor = FIELD_RESIDUAL_FACTOR if name in ('square_residual', 'ri_residual') else RESIDUAL_FACTOR
            if value > factor * eps:
                logger.warning(f"{name} {value:.3e} exceeds {factor:.0e} eps at {result.bits} bits")

    def _set_state(self, state: GenerationState):
        """Set coordinator state and notify listeners."""
        old_state = self._state
        self._state = state
        if old_state != state:
            logger.info(f"Generator state: {old_state.value} → {state.value}")
            for callback in self._on_state_change:
                try:
                    callback(state)
                except Exception as e:
                    logger.error(f"Error in state callback: {e}")

    def _notify_progress(self):
        progress = self.get_progress()
        for callback in self._on_progress:
            try:
                callback(progress)
            except Exception as e:
                logger.error(f"Error in progress callback: {e}")

    def get_progress(self) -> GenerationProgress:
        """Get current generation progress."""
        return GenerationProgress(
            state=self._state,
            bits=self._bits,
            attempt=self._attempt,
            total_attempts=len(self._rungs),
            points=self._points,
            kite_spread=self._kite_spread,
        )

    def get_state(self) -> GenerationState:
        return self._state

    def on_progress(self, callback: Callable[[GenerationProgress], None]):
        """Register callback for progress updates."""
        self._on_progress.append(callback)

    def on_state_change(self, callback: Callable[[GenerationState], None]):
        """Register callback for state changes."""
        self._on_state_change.append(callback)


def run_config(config: PatternConfig, n_cap: int = BRUTEFORCE_N_CAP) -> dict:
    """Generate and validate one config; a picklable summary for sweeps."""
    try:
        result = PatternCoordinator(config, n_cap=n_cap).generate()
    except ZGammaError as e:
        return {'config': config.to_dict(), 'passed': False, 'error': str(e)}
    return {
        'config': result.config.to_dict(),
        'passed': result.passed,
        'bits': result.bits,
        'residuals': result.residuals,
        'validation': result.validation.to_dict() if result.validation else None,
        'wall_time': result.wall_time,
    }
