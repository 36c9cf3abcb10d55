"""
Shared fixtures for the zgamma test suite.
"""

import math

import pytest

from zgamma.lattice.precision import PrecisionContext
from zgamma.pattern import PatternConfig, PatternMode, generate_map, z2_field


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: acceptance-scale grids (deselect with -m 'not slow')")


@pytest.fixture
def ctx53():
    return PrecisionContext(53)


@pytest.fixture
def ctx212():
    return PrecisionContext(212)


@pytest.fixture
def ctx256():
    return PrecisionContext(256)


def _make_config(gamma=0.5, alpha_pi=0.5, size=12, bits=212, **kwargs) -> PatternConfig:
    """PatternConfig with alpha given as a multiple of pi."""
    return PatternConfig(gamma=gamma, alpha=alpha_pi * math.pi, alpha_pi=alpha_pi, size=size,
                         precision=PrecisionContext(bits), **kwargs)


@pytest.fixture
def make_config():
    """Factory for PatternConfig with alpha given as a multiple of pi."""
    return _make_config


@pytest.fixture(scope="session")
def half_map():
    """Z^{1/2} at alpha = pi/2, size 12, 212 bits."""
    return generate_map(_make_config(gamma=0.5, alpha_pi=0.5, size=12))


@pytest.fixture(scope="session")
def identity_map():
    """gamma = 1 at alpha = pi/3: the rhombic lattice n + m e^{i alpha}."""
    return generate_map(_make_config(gamma=1.0, alpha_pi=1 / 3, size=10, bits=106))


@pytest.fixture(scope="session")
def z2_half():
    """Z^2 radius field at alpha = pi/2 up to M = 8."""
    return z2_field(math.pi / 2, 8, PrecisionContext(212), alpha_pi=0.5)


@pytest.fixture(scope="session")
def z2_mode_config():
    return PatternConfig(gamma=2.0, alpha=math.pi / 2, alpha_pi=0.5, size=12,
                         mode=PatternMode.Z2, precision=PrecisionContext(212))
