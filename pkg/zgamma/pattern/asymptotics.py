"""
Power-law fit of the map along the real axis.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..config import FIT_MIN_SIZE
from ..errors import ConfigError
from .models import GridMap

logger = logging.getLogger(__name__)


@dataclass
class AsymptoticFit:
    """f_{n,0} ~ c n^gamma over ``n_range``, plus the off-axis diagnostic."""
    c_fit: float
    gamma_fit: float
    conjecture_residual: float
    n_range: Tuple[int, int]

    def to_dict(self) -> dict:
        return {
            'c_fit': self.c_fit,
            'gamma_fit': self.gamma_fit,
            'conjecture_residual': self.conjecture_residual,
            'n_range': list(self.n_range),
        }


def fit_asymptotics(grid: GridMap) -> AsymptoticFit:
    """
    Least-squares fit of log f_{n,0} against log n over the upper half of
    the available axis.

    The residual max |f - c (n + e^{i alpha} m)^gamma| / |f| over all points
    of the grid is reported, never asserted.

    Raises:
        ConfigError: if the axis is shorter than FIT_MIN_SIZE
    """
    axis = grid.axis()
    n_max = len(axis) - 1
    if n_max < FIT_MIN_SIZE:
        raise ConfigError(f"fit needs n_max >= {FIT_MIN_SIZE}, got {n_max}")

    lo = max(1, n_max // 2)
    n = np.arange(lo, n_max + 1, dtype=float)
    f = np.array([abs(complex(axis[k])) for k in range(lo, n_max + 1)], dtype=float)
    slope, intercept = np.polyfit(np.log(n), np.log(f), 1)
    c_fit = float(np.exp(intercept))
    gamma_fit = float(slope)

    idx, vals = grid.to_numpy()
    alpha = float(grid.config.alpha_value())
    mask = (idx.sum(axis=1) > 0) & (np.abs(vals) > 0)
    z = idx[mask, 0] + np.exp(1j * alpha) * idx[mask, 1]
    model = c_fit * np.power(z.astype(complex), gamma_fit)
    residual = float(np.max(np.abs(vals[mask] - model) / np.abs(vals[mask]))) if mask.any() else 0.0

    logger.info(f"Fit over n in [{lo}, {n_max}]: c={c_fit:.6g}, gamma={gamma_fit:.6g}, "
                f"off-axis residual {residual:.3e}")
    return AsymptoticFit(c_fit=c_fit, gamma_fit=gamma_fit, conjecture_residual=residual,
                         n_range=(lo, n_max))
