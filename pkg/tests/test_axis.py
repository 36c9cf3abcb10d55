"""
Tests for the diagonal radii and the two axes of the map.
"""

import numpy as np
import pytest

from zgamma.errors import ConfigError, PoleError
from zgamma.lattice import PrecisionContext
from zgamma.pattern import (
    PatternConfig,
    PatternMode,
    axis_map,
    axis_points,
    axis_points_from_constraint,
    axis_radii,
    constraint_residual,
)


class TestAxisRadii:
    def test_identity_radii(self, ctx53):
        radii = axis_radii(1.0, 12, ctx53)
        assert len(radii) == 13
        assert all(r == 1 for r in radii.values)

    @pytest.mark.parametrize("gamma", [0.3, 0.5, 1.5])
    def test_first_ratio(self, ctx53, gamma):
        radii = axis_radii(gamma, 3, ctx53)
        assert radii[0] == 1
        assert float(radii[1]) == pytest.approx(gamma / (2 - gamma), rel=1e-14)

    @pytest.mark.parametrize("gamma", [0.5, 1.25])
    def test_recurrence_matches_closed_form(self, ctx212, gamma):
        radii = axis_radii(gamma, 60, ctx212)
        assert radii.max_rel_diff < 1e-50

    @pytest.mark.parametrize("gamma", [0.5, 1.5])
    def test_power_law(self, ctx53, gamma):
        radii = axis_radii(gamma, 200, ctx53)
        n = np.arange(100, 201)
        r = np.array([float(radii[k]) for k in n])
        slope, _ = np.polyfit(np.log(n), np.log(r), 1)
        assert slope == pytest.approx(gamma - 1, abs=1e-2)

    def test_pole_at_two(self, ctx53):
        with pytest.raises(PoleError):
            axis_radii(2, 5, ctx53)


class TestAxisPoints:
    @pytest.mark.parametrize("gamma", [0.5, 1.0, 1.5])
    def test_second_point(self, make_config, gamma):
        pts = axis_points(make_config(gamma=gamma, size=6, bits=53))
        assert pts.real_axis[0] == 0
        assert float(pts.real_axis[1].real) == pytest.approx(1.0)
        assert float(pts.real_axis[2].real) == pytest.approx(2 / (2 - gamma), rel=1e-14)

    def test_m_axis_is_rotated_copy(self, make_config):
        config = make_config(gamma=0.5, alpha_pi=1 / 3, size=6, bits=106)
        pts = axis_points(config)
        rot = config.ctx.expi(config.beta_value())
        for x, y in zip(pts.real_axis, pts.imag_axis):
            assert abs(y - rot * x) < 1e-28

    @pytest.mark.parametrize("gamma", [0.5, 1.5])
    def test_constraint_recurrence_agrees(self, make_config, gamma):
        config = make_config(gamma=gamma, size=10)
        a = axis_points(config)
        b = axis_points_from_constraint(config)
        assert len(a.real_axis) == len(b.real_axis) == 11
        for x, y in zip(a.real_axis, b.real_axis):
            assert abs(x - y) < 1e-50 * max(1, abs(x))

    def test_z2_axis(self, z2_mode_config):
        real = axis_points(z2_mode_config).real_axis
        assert real[1] == 0
        assert [float(real[k].real) for k in (2, 4, 6)] == [1.0, 4.0, 9.0]

    def test_constraint_recurrence_rejects_z2_and_log(self, z2_mode_config):
        with pytest.raises(ConfigError):
            axis_points_from_constraint(z2_mode_config)
        log = PatternConfig(gamma=2.0, alpha=1.0, size=6, mode=PatternMode.LOG,
                            precision=PrecisionContext(53))
        with pytest.raises(ConfigError):
            axis_points_from_constraint(log)

    def test_log_has_no_axis(self):
        config = PatternConfig(gamma=2.0, alpha=1.0, size=6, mode=PatternMode.LOG,
                               precision=PrecisionContext(53))
        with pytest.raises(PoleError):
            axis_points(config)


class TestAxisMap:
    def test_axis_only(self, make_config):
        grid = axis_map(make_config(size=8, bits=53))
        assert grid.meta['axis_only']
        assert len(grid) == 2 * 8 + 1
        assert list(grid.quads()) == []
        assert len(grid.axis()) == 9

    def test_constraint_holds_on_identity(self, identity_map):
        for key in [(1, 0), (0, 3), (2, 3), (4, 4)]:
            assert constraint_residual(identity_map, *key) < 1e-25

    def test_constraint_holds_on_generated_axes(self, half_map):
        for k in range(1, half_map.size):
            assert constraint_residual(half_map, k, 0) < 1e-50
