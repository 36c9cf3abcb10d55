"""
Tests for radius fields: seeds, evolution, extraction, duality and the
two radius equations.
"""

import math

import pytest

from zgamma.errors import ConfigError, NotAKite, SignLoss
from zgamma.lattice import PrecisionContext
from zgamma.pattern import (
    GridMap,
    PatternConfig,
    PatternMode,
    RadiusField,
    border_radii,
    dual_field,
    extract_radius_field,
    field_residuals,
    generate_map,
    initial_radii,
    is_symmetric,
    max_relative_difference,
    radii_evolution,
    z2_field,
)


def evolve(config, M_max):
    R0, Ri = initial_radii(config)
    return radii_evolution(R0, Ri, config, M_max)


class TestSeeds:
    def test_zgamma_seeds(self, make_config):
        R0, Ri = initial_radii(make_config(gamma=0.5, alpha_pi=0.5))
        assert R0 == 1
        assert float(Ri) == pytest.approx(math.tan(math.pi / 8), rel=1e-14)

    def test_identity_seeds(self, make_config):
        R0, Ri = initial_radii(make_config(gamma=1.0, alpha_pi=0.3))
        assert float(Ri) == pytest.approx(1.0, abs=1e-15)

    def test_z2_seeds(self, z2_mode_config):
        R0, Ri = initial_radii(z2_mode_config)
        assert R0 == 0
        assert float(Ri) == pytest.approx(2 / math.pi, rel=1e-14)

    def test_bad_seeds(self, make_config):
        with pytest.raises(ConfigError):
            radii_evolution(1, 0, make_config(), 4)


class TestEvolution:
    def test_identity_field(self, make_config):
        field = evolve(make_config(gamma=1.0, alpha_pi=0.3), 10)
        assert all(abs(R - 1) < 1e-50 for R in field.R.values())
        assert len(field) == sum(2 * M + 1 for M in range(11))

    def test_known_values(self, make_config):
        field = evolve(make_config(gamma=0.5, alpha_pi=0.5), 6)
        assert float(field[(0, 2)]) == pytest.approx(0.288425, abs=1e-6)
        assert float(field[(1, 2)]) == pytest.approx(0.268246, abs=1e-6)
        assert float(field[(-1, 2)]) == pytest.approx(0.268246, abs=1e-6)
        assert is_symmetric(field, 1e-40)

    def test_residuals_vanish(self, make_config):
        field = evolve(make_config(gamma=0.5, alpha_pi=1 / 3), 10)
        res = field_residuals(field)
        assert res.max_square < 1e-50
        assert res.max_ri < 1e-50
        assert res.checked > 0
        assert res.to_dict()['checked'] == res.checked

    def test_right_edge_follows_riccati(self, make_config, ctx212):
        field = evolve(make_config(gamma=0.5, alpha_pi=0.5), 6)
        edge = border_radii(0.5, math.pi / 2, 5, ctx212, alpha_pi=0.5)
        for n, R in enumerate(edge):
            assert abs(field[(n, n + 1)] - R) < 1e-40 * R, n

    def test_perturbed_seed_loses_sign(self, make_config):
        config = make_config(gamma=0.5, alpha_pi=1 / 3)
        R0, Ri = initial_radii(config)
        radii_evolution(R0, Ri, config, 40)
        with pytest.raises(SignLoss) as info:
            radii_evolution(R0, Ri * (1 + config.ctx.mpf(1e-6)), config, 40)
        assert info.value.z[1] <= 40


class TestExtraction:
    @pytest.mark.parametrize("alpha_pi", [0.5, 1 / 3])
    def test_two_paths_agree(self, make_config, alpha_pi):
        config = make_config(gamma=0.5, alpha_pi=alpha_pi, size=12)
        extracted = extract_radius_field(generate_map(config))
        evolved = evolve(config, 6)
        assert extracted.M_max == 6
        assert max_relative_difference(extracted, evolved) < 1e-40

    @pytest.mark.slow
    @pytest.mark.parametrize("alpha_pi", [0.5, 1 / 3])
    def test_two_paths_agree_large(self, make_config, alpha_pi):
        config = make_config(gamma=0.5, alpha_pi=alpha_pi, size=22)
        extracted = extract_radius_field(generate_map(config))
        evolved = evolve(config, 10)
        assert max_relative_difference(extracted, evolved, M_max=10) < 1e-40

    def test_kite_spread_recorded(self, half_map):
        field = extract_radius_field(half_map)
        assert field.meta['kite_spread'] < 1e-50
        assert field[(0, 0)] == 1

    def test_not_a_kite(self, half_map):
        values = dict(half_map.values)
        values[(3, 3)] += half_map.config.ctx.mpc(0.05, 0)
        grid = GridMap(values=values, config=half_map.config, size=half_map.size)
        with pytest.raises(NotAKite) as info:
            extract_radius_field(grid)
        assert info.value.vertex in {(3, 3), (2, 3), (3, 2), (4, 3), (3, 4)}


class TestZ2AndLog:
    def test_z2_values(self, z2_half):
        assert z2_half[(0, 0)] == 0
        assert float(z2_half[(0, 1)]) == pytest.approx(2 / math.pi, rel=1e-14)
        assert float(z2_half[(0, 2)]) == pytest.approx(1.3630, abs=1e-4)
        assert float(z2_half[(1, 2)]) == pytest.approx(math.pi / 2, rel=1e-14)
        assert float(z2_half[(-1, 2)]) == pytest.approx(math.pi / 2, rel=1e-14)

    def test_z2_positive(self):
        field = z2_field(math.pi / 3, 10, PrecisionContext(212), alpha_pi=1 / 3)
        assert field.kind == 'z2'
        assert all(R > 0 for key, R in field.items() if key != (0, 0))

    def test_z2_residuals(self, z2_half):
        res = field_residuals(z2_half)
        assert res.max_square < 1e-50
        assert res.max_ri < 1e-50

    def test_log_is_dual(self, z2_half):
        log = dual_field(z2_half)
        assert log.kind == 'log'
        assert log.gamma == 0
        assert z2_half.config.ctx.mp.isinf(log[(0, 0)])
        assert float(log[(0, 1)] * z2_half[(0, 1)]) == pytest.approx(1.0)
        res = field_residuals(log)
        assert res.max_square < 1e-50
        assert res.max_ri < 1e-50

    def test_dual_is_involution(self, z2_half, make_config):
        assert dual_field(dual_field(z2_half)) is z2_half
        field = evolve(make_config(gamma=0.5, alpha_pi=1 / 3), 6)
        dual = dual_field(field)
        assert float(dual.gamma) == pytest.approx(1.5)
        assert dual_field(dual) is field

    @pytest.mark.parametrize("gamma", [0.5, 1.5])
    def test_dual_solves_dual_equations(self, make_config, gamma):
        dual = dual_field(evolve(make_config(gamma=gamma, alpha_pi=0.4), 8))
        res = field_residuals(dual)
        assert res.max_square < 1e-50
        assert res.max_ri < 1e-50

    def test_zgamma_tends_to_z2(self, z2_half):
        gamma = 1.999
        config = z2_half.config
        field = evolve(PatternConfig(gamma=gamma, alpha=config.alpha, alpha_pi=0.5, size=8,
                                     mode=PatternMode.ZGAMMA, precision=config.ctx), 3)
        scale = config.ctx.mpf(2 - gamma) / gamma
        scaled = RadiusField(R={k: v * scale for k, v in field.R.items()}, config=field.config,
                             M_max=field.M_max, gamma=field.gamma)
        assert max_relative_difference(scaled, z2_half, M_max=3) < 1e-2
