"""
Per-run arbitrary precision arithmetic.

Every pattern, trajectory and check is computed under a PrecisionContext
wrapping its own mpmath context, so runs at different mantissa widths can
coexist in one process without touching the global ``mpmath.mp``.
"""

import logging
import math
from typing import Any, Iterable, Union

import mpmath

from ..config import DEFAULT_BITS, LARGE_GRID_BITS, MIN_BITS, SMALL_GRID_SIZE
from ..errors import ConfigError

logger = logging.getLogger(__name__)

# Annotation aliases; concrete values are mpf/mpc instances of a context.
Real = Any
ComplexPoint = Any
Number = Union[int, float, str, Real]


class PrecisionContext:
    """
    Configurable-mantissa real/complex arithmetic.

    All values created through ``mpf``/``mpc`` round to ``mantissa_bits``,
    and ``eps = 2**(1 - mantissa_bits)`` is the unit roundoff used for
    every scale-relative threshold.
    """

    def __init__(self, mantissa_bits: int = DEFAULT_BITS):
        """
        Initialize the context.

        Args:
            mantissa_bits: Binary mantissa width, at least 53
        """
        bits = int(mantissa_bits)
        if bits < MIN_BITS:
            raise ConfigError(f"mantissa_bits must be >= {MIN_BITS}, got {mantissa_bits}")
        self.mantissa_bits = bits
        self._mp = mpmath.MPContext()
        self._mp.prec = bits
        self.eps = self._mp.ldexp(self._mp.mpf(1), 1 - bits)

    @classmethod
    def for_size(cls, size: int) -> 'PrecisionContext':
        """Default context for a grid with n+m <= size."""
        return cls(DEFAULT_BITS if size <= SMALL_GRID_SIZE else LARGE_GRID_BITS)

    @property
    def mp(self):
        """The underlying mpmath context."""
        return self._mp

    @property
    def digits(self) -> int:
        """Decimal digits that reproduce a value bit-exactly."""
        return int(self.mantissa_bits * math.log10(2)) + 3

    @property
    def pi(self) -> Real:
        return +self._mp.pi

    def mpf(self, value: Number) -> Real:
        return self._mp.mpf(value)

    def mpc(self, re: Number = 0, im: Number = 0) -> ComplexPoint:
        return self._mp.mpc(re, im)

    def expi(self, theta: Number) -> ComplexPoint:
        """e^{i theta} at this precision."""
        return self._mp.expj(self._mp.mpf(theta))

    def scale(self, values: Iterable[Any]) -> Real:
        """Largest magnitude among values (0 for an empty input)."""
        best = self._mp.zero
        for v in values:
            a = abs(v)
            if a > best:
                best = a
        return best

    def is_finite(self, value: Any) -> bool:
        return bool(self._mp.isfinite(value))

    def to_decimal(self, value: Any) -> str:
        """Decimal string carrying the full working precision."""
        return self._mp.nstr(self._mp.mpf(value), self.digits, strip_zeros=False)

    def from_decimal(self, text: str) -> Real:
        return self._mp.mpf(text)

    def elevated(self, extra_bits: int) -> 'PrecisionContext':
        """A new context with extra_bits more mantissa."""
        return PrecisionContext(self.mantissa_bits + int(extra_bits))

    def __getstate__(self):
        return {'mantissa_bits': self.mantissa_bits}

    def __setstate__(self, state):
        self.__init__(state['mantissa_bits'])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrecisionContext) and other.mantissa_bits == self.mantissa_bits

    def __hash__(self) -> int:
        return hash(self.mantissa_bits)

    def __repr__(self) -> str:
        return f"PrecisionContext(mantissa_bits={self.mantissa_bits})"
