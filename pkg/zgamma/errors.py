"""
Exception hierarchy for the discrete Z^gamma engine.

Numerical routines raise these; validation checks never do and report
through ValidationReport instead.
"""

from typing import Optional, Tuple


class ZGammaError(Exception):
    """Base class for all engine errors."""


class ConfigError(ZGammaError, ValueError):
    """Invalid parameters (gamma, alpha, precision, size)."""


class DegenerateQuad(ZGammaError):
    """A cross-ratio denominator vanished relative to the input scale."""

    def __init__(self, message: str, location: Optional[Tuple[int, int]] = None):
        self.location = location
        if location is not None:
            message = f"{message} at (n, m) = {location}"
        super().__init__(message)


class PoleError(ZGammaError):
    """A Gamma or coefficient argument hit a pole."""


class NoConvergence(ZGammaError):
    """A series hit its term cap before reaching tolerance."""

    def __init__(self, message: str, terms: int = 0, value=None):
        self.terms = terms
        self.value = value
        super().__init__(f"{message} after {terms} terms")


class StepSingular(ZGammaError):
    """A dynamical step divided by a (relatively) vanishing denominator."""

    def __init__(self, which: str, index: Optional[int] = None):
        self.which = which
        self.index = index
        where = f" at step {index}" if index is not None else ""
        super().__init__(f"Singular denominator '{which}'{where}")


class BracketLost(ZGammaError):
    """Separatrix bisection found no surviving interval."""

    def __init__(self, M: int, bits: Optional[int] = None):
        self.M = M
        self.bits = bits
        hint = f" at {bits} bits; raise mantissa_bits" if bits else ""
        super().__init__(f"No surviving bracket at M={M}{hint}")


class SignLoss(ZGammaError):
    """A propagated radius became non-positive."""

    def __init__(self, z: Tuple[int, int], value=None):
        self.z = z
        self.value = value
        super().__init__(f"Radius lost positivity at z = {z[0]}+{z[1]}i (R = {value})")


class NotAKite(ZGammaError):
    """Incident edge lengths at an even vertex disagree beyond tolerance."""

    def __init__(self, vertex: Tuple[int, int], spread: float):
        self.vertex = vertex
        self.spread = spread
        super().__init__(f"Vertex {vertex} is not a kite centre (spread {spread:.3e})")
