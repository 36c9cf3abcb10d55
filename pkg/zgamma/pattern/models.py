"""
Data model for discrete maps, radius fields and circle patterns.
"""

import logging
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from ..config import ALPHA_MARGIN, ANGLE_TOL, KITE_TOL, SIGN_BAND
from ..errors import ConfigError
from ..lattice.indices import to_sublattice
from ..lattice.precision import ComplexPoint, PrecisionContext, Real

logger = logging.getLogger(__name__)


class PatternMode(Enum):
    """Which discrete map is generated."""
    ZGAMMA = "zgamma"
    Z2 = "z2"
    LOG = "log"
    KAPPA = "kappa"


@dataclass
class PatternConfig:
    """
    Parameters of one generation run.

    ``beta`` defaults to gamma*alpha; any other value gives a skew pattern
    whose validation is downgraded to warnings. For z2 and log modes gamma
    is fixed to 2 (log is generated as the dual of Z^2).
    """
    gamma: float
    alpha: float
    size: int
    mode: PatternMode = PatternMode.ZGAMMA
    kappa: float = 1.0
    precision: Optional[PrecisionContext] = None
    beta: Optional[float] = None
    alpha_pi: Optional[float] = None
    kite_tol: float = KITE_TOL
    angle_tol: float = ANGLE_TOL
    sign_band: float = SIGN_BAND

    def __post_init__(self):
        if isinstance(self.mode, str):
            self.mode = PatternMode(self.mode)
        if self.alpha_pi is not None:
            self.alpha = self.alpha_pi * math.pi
        if not ALPHA_MARGIN <= self.alpha <= math.pi - ALPHA_MARGIN:
            raise ConfigError(f"alpha must lie in [{ALPHA_MARGIN}, pi - {ALPHA_MARGIN}], got {self.alpha}")
        if self.mode in (PatternMode.Z2, PatternMode.LOG):
            self.gamma = 2.0
        elif not 0 < self.gamma < 2:
            raise ConfigError(f"gamma must lie in (0, 2) for mode {self.mode.value}; use z2 for gamma=2")
        if self.kappa <= 0:
            raise ConfigError(f"kappa must be positive, got {self.kappa}")
        if self.mode is not PatternMode.KAPPA and self.kappa != 1.0:
            raise ConfigError("kappa != 1 requires mode 'kappa'")
        if self.size < 1:
            raise ConfigError(f"size must be >= 1, got {self.size}")
        if self.precision is None:
            self.precision = PrecisionContext.for_size(self.size)

    @property
    def ctx(self) -> PrecisionContext:
        return self.precision

    @property
    def is_skew(self) -> bool:
        return self.beta is not None and not math.isclose(self.beta, self.gamma * self.alpha)

    def alpha_value(self) -> Real:
        if self.alpha_pi is not None:
            return self.ctx.mpf(self.alpha_pi) * self.ctx.pi
        return self.ctx.mpf(self.alpha)

    def beta_value(self) -> Real:
        """Opening angle of the m-axis."""
        if self.beta is not None:
            return self.ctx.mpf(self.beta)
        return self.ctx.mpf(self.gamma) * self.alpha_value()

    def t(self) -> Real:
        return self.ctx.mp.cos(self.alpha_value())

    def cross_ratio_value(self) -> ComplexPoint:
        """kappa^2 e^{-2 i alpha}."""
        k = self.ctx.mpf(self.kappa)
        return k * k * self.ctx.expi(-2 * self.alpha_value())

    def with_bits(self, bits: int) -> 'PatternConfig':
        return replace(self, precision=PrecisionContext(bits))

    def to_dict(self) -> dict:
        return {
            'gamma': self.gamma,
            'alpha': self.alpha,
            'alpha_pi': self.alpha_pi,
            'beta': self.beta,
            'kappa': self.kappa,
            'size': self.size,
            'mode': self.mode.value,
            'bits': self.ctx.mantissa_bits,
            'kite_tol': self.kite_tol,
            'angle_tol': self.angle_tol,
            'sign_band': self.sign_band,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'PatternConfig':
        return cls(
            gamma=data['gamma'],
            alpha=data['alpha'],
            size=data['size'],
            mode=PatternMode(data.get('mode', 'zgamma')),
            kappa=data.get('kappa', 1.0),
            precision=PrecisionContext(data.get('bits', 53)),
            beta=data.get('beta'),
            alpha_pi=data.get('alpha_pi'),
            kite_tol=data.get('kite_tol', KITE_TOL),
            angle_tol=data.get('angle_tol', ANGLE_TOL),
            sign_band=data.get('sign_band', SIGN_BAND),
        )


@dataclass
class GridMap:
    """
    Discrete map f_{n,m} on {n, m >= 0, n+m <= size}.

    ``values`` may be partial (e.g. axis-only maps used for fits).
    """
    values: Dict[Tuple[int, int], ComplexPoint]
    config: PatternConfig
    size: int
    meta: dict = field(default_factory=dict)

    def __getitem__(self, key: Tuple[int, int]) -> ComplexPoint:
        return self.values[key]

    def __contains__(self, key: Tuple[int, int]) -> bool:
        return key in self.values

    def __len__(self) -> int:
        return len(self.values)

    def get(self, key: Tuple[int, int], default=None):
        return self.values.get(key, default)

    def keys(self) -> List[Tuple[int, int]]:
        """Indices in row-major (n, m) order."""
        return sorted(self.values)

    def quads(self) -> Iterator[Tuple[int, int]]:
        """(n, m) of every elementary quadrilateral with all four corners present."""
        for n, m in self.keys():
            if (n + 1, m) in self.values and (n + 1, m + 1) in self.values and (n, m + 1) in self.values:
                yield n, m

    def quad(self, n: int, m: int) -> Tuple[ComplexPoint, ...]:
        v = self.values
        return v[(n, m)], v[(n + 1, m)], v[(n + 1, m + 1)], v[(n, m + 1)]

    def axis(self) -> List[ComplexPoint]:
        """f_{n,0} for n = 0, 1, ... while present."""
        out = []
        n = 0
        while (n, 0) in self.values:
            out.append(self.values[(n, 0)])
            n += 1
        return out

    def scale(self) -> Real:
        return self.config.ctx.scale(self.values.values())

    def to_numpy(self) -> Tuple[np.ndarray, np.ndarray]:
        """(indices[k, 2], complex values[k]) in row-major order."""
        keys = self.keys()
        idx = np.array(keys, dtype=int).reshape(-1, 2)
        vals = np.array([complex(self.values[k]) for k in keys], dtype=complex)
        return idx, vals


@dataclass
class RadiusField:
    """
    Radii R_z on the sublattice V up to M_max.

    ``gamma`` is the exponent the field solves the radius equations for;
    it differs from config.gamma after dualisation. ``kind`` names the
    pattern family ('zgamma', 'z2', 'log', 'extracted').
    """
    R: Dict[Tuple[int, int], Real]
    config: PatternConfig
    M_max: int
    gamma: Real
    kind: str = 'zgamma'
    meta: dict = field(default_factory=dict)
    dual_of: Optional['RadiusField'] = field(default=None, repr=False, compare=False)

    def __getitem__(self, key: Tuple[int, int]) -> Real:
        return self.R[key]

    def __contains__(self, key: Tuple[int, int]) -> bool:
        return key in self.R

    def __len__(self) -> int:
        return len(self.R)

    def get(self, N: int, M: int, default=None):
        return self.R.get((N, M), default)

    def radius(self, N: int, M: int) -> Real:
        return self.R[(N, M)]

    def keys(self) -> List[Tuple[int, int]]:
        """Labels ordered by (N, M)."""
        return sorted(self.R)

    def items(self) -> List[Tuple[Tuple[int, int], Real]]:
        return [(k, self.R[k]) for k in self.keys()]

    def is_finite_positive(self, N: int, M: int) -> bool:
        value = self.R.get((N, M))
        return value is not None and value > 0 and self.config.ctx.is_finite(value)

    def row(self, M: int) -> List[Real]:
        return [self.R[(N, M)] for N in range(-M, M + 1) if (N, M) in self.R]


@dataclass(frozen=True)
class Circle:
    """One circle C_z of a pattern."""
    center: ComplexPoint
    radius: Real
    N: int
    M: int


@dataclass
class CirclePattern:
    """
    Circles with their combinatorics.

    ``i_pairs`` intersect at alpha, ``one_pairs`` at pi - alpha and
    ``half_pairs`` (z, z+1+i) / (z, z-1+i) touch.
    """
    circles: List[Circle]
    alpha: Real
    i_pairs: List[Tuple[int, int]] = field(default_factory=list)
    one_pairs: List[Tuple[int, int]] = field(default_factory=list)
    half_pairs: List[Tuple[int, int]] = field(default_factory=list)

    @classmethod
    def from_map(cls, grid: GridMap, radii: RadiusField) -> 'CirclePattern':
        """Circles at the even vertices of grid, skipping zero or infinite radii."""
        index: Dict[Tuple[int, int], int] = {}
        circles: List[Circle] = []
        for n, m in grid.keys():
            if (n + m) % 2:
                continue
            N, M = to_sublattice(n, m)
            if not radii.is_finite_positive(N, M):
                continue
            index[(N, M)] = len(circles)
            circles.append(Circle(center=grid[(n, m)], radius=radii[(N, M)], N=N, M=M))

        pattern = cls(circles=circles, alpha=grid.config.alpha_value())
        for (N, M), k in sorted(index.items()):
            for target, bucket in (((N, M + 1), pattern.i_pairs),
                                   ((N + 1, M), pattern.one_pairs),
                                   ((N + 1, M + 1), pattern.half_pairs),
                                   ((N - 1, M + 1), pattern.half_pairs)):
                other = index.get(target)
                if other is not None:
                    bucket.append((k, other))
        return pattern
