"""
Tests for cross-ratio propagation of the map interior.
"""

import logging
import math

import pytest

from zgamma.errors import ConfigError, DegenerateQuad
from zgamma.lattice import PrecisionContext
from zgamma.pattern import (
    AxisPoints,
    PatternConfig,
    PatternMode,
    axis_points_from_constraint,
    cross_ratio_residual,
    generate_map,
    propagate_interior,
)


class TestGenerateMap:
    def test_identity_lattice(self, identity_map):
        ctx = identity_map.config.ctx
        e = ctx.expi(identity_map.config.alpha_value())
        assert len(identity_map) == 11 * 12 // 2
        for (n, m), f in identity_map.values.items():
            assert abs(f - (n + m * e)) < 1e-25 * max(1, n + m), (n, m)

    @pytest.mark.slow
    def test_identity_lattice_large(self, make_config):
        grid = generate_map(make_config(gamma=1.0, alpha_pi=1 / 3, size=40, bits=106))
        e = grid.config.ctx.expi(grid.config.alpha_value())
        assert len(grid) == 41 * 42 // 2
        for (n, m), f in grid.values.items():
            assert abs(f - (n + m * e)) < 1e-20 * max(1, n + m), (n, m)

    def test_cross_ratio_holds(self, half_map):
        assert cross_ratio_residual(half_map) < 1e-50

    def test_constraint_recorded(self, half_map):
        assert half_map.meta['constraint_residual'] < 1e-40
        assert half_map.meta['constraint_at'] is not None

    def test_triangle_shape(self, half_map):
        assert half_map.size == 12
        assert all(n + m <= 12 for n, m in half_map.keys())
        assert (12, 0) in half_map and (0, 12) in half_map
        assert len(list(half_map.quads())) == 11 * 12 // 2

    def test_radius_modes_rejected(self, z2_mode_config):
        with pytest.raises(ConfigError):
            generate_map(z2_mode_config)

    def test_kappa_parallelograms(self):
        config = PatternConfig(gamma=1.0, alpha=math.pi / 2, alpha_pi=0.5, size=8,
                               mode=PatternMode.KAPPA, kappa=2.0, precision=PrecisionContext(106))
        grid = generate_map(config)
        e = config.ctx.expi(config.alpha_value()) / 2
        for (n, m), f in grid.values.items():
            assert abs(f - (n + m * e)) < 1e-25 * max(1, n + m), (n, m)

    def test_skew_data_warns(self, make_config, caplog):
        config = make_config(size=4, bits=53, beta=0.4 * math.pi / 2)
        assert config.is_skew
        with caplog.at_level(logging.WARNING, logger="zgamma.pattern.generator"):
            grid = generate_map(config)
        assert "Skew" in caplog.text
        assert len(grid) == 15


class TestPropagation:
    def test_constraint_axes_give_same_map(self, half_map, make_config):
        config = make_config(size=12)
        grid = propagate_interior(config, axis_points_from_constraint(config))
        for key, f in half_map.values.items():
            assert abs(grid[key] - f) < 1e-45 * max(1, abs(f)), key

    def test_degenerate_axis_reports_quad(self, make_config):
        config = make_config(size=3, bits=53)
        ctx = config.ctx
        axis = AxisPoints(real_axis=[ctx.mpc(0)] * 4, imag_axis=[ctx.mpc(0, k) for k in range(4)])
        with pytest.raises(DegenerateQuad) as info:
            propagate_interior(config, axis)
        assert info.value.location == (0, 0)
