"""
Tests for the generation coordinator and sweep summaries.
"""

import math

import pytest

from zgamma.errors import DegenerateQuad
from zgamma.geometry import CheckStatus
from zgamma.lattice import PrecisionContext
from zgamma.pattern import PatternConfig, PatternMode
from zgamma.pattern.coordinator import (
    GenerationState,
    PatternCoordinator,
    PatternResult,
    run_config,
)


class TestCoordinator:
    def test_zgamma_run(self, make_config):
        coordinator = PatternCoordinator(make_config(size=10), n_cap=6)
        states, progress = [], []
        coordinator.on_state_change(states.append)
        coordinator.on_progress(progress.append)

        result = coordinator.generate()

        assert result.passed
        assert result.bits == 212
        assert result.attempts == [(212, 'accepted')]
        assert result.field is not None and result.pattern is not None
        assert result.residuals['kite_spread'] < 1e-50
        assert result.residuals['cross_ratio_residual'] < 1e-50
        assert states == [GenerationState.GENERATING, GenerationState.VALIDATING, GenerationState.DONE]
        assert progress and progress[-1].points == 66
        assert coordinator.get_state() is GenerationState.DONE
        assert coordinator.get_progress().to_dict()['state'] == 'done'

    def test_z2_run(self):
        config = PatternConfig(gamma=2.0, alpha=math.pi / 2, alpha_pi=0.5, size=8, mode=PatternMode.Z2,
                               precision=PrecisionContext(212))
        result = PatternCoordinator(config, n_cap=6).generate()
        assert result.passed
        assert result.field.kind == 'z2'
        assert 'cross_ratio_residual' not in result.residuals
        assert result.residuals['square_residual'] < 1e-50

    def test_log_run_has_no_map(self):
        config = PatternConfig(gamma=2.0, alpha=1.0, size=8, mode=PatternMode.LOG,
                               precision=PrecisionContext(106))
        result = PatternCoordinator(config).generate()
        assert result.grid is None and result.pattern is None
        assert result.field.kind == 'log'
        assert [r.check for r in result.validation.reports] == ['sign']

    def test_without_validation(self, make_config):
        result = PatternCoordinator(make_config(size=6, bits=53), validate=False).generate()
        assert result.validation is None
        assert result.passed

    def test_ladder_skips_narrower_rungs(self, make_config):
        coordinator = PatternCoordinator(make_config(size=4, bits=106), ladder=(53, 106, 212))
        assert coordinator.get_progress().total_attempts == 2

    def test_every_rung_failing_raises(self, make_config, monkeypatch):
        def broken(config):
            raise DegenerateQuad("forced", (0, 0))

        monkeypatch.setattr("zgamma.pattern.coordinator.generate_map", broken)
        states = []
        coordinator = PatternCoordinator(make_config(size=4, bits=53), ladder=(106,))
        coordinator.on_state_change(states.append)
        with pytest.raises(DegenerateQuad):
            coordinator.generate()
        assert states[-1] is GenerationState.ERROR
        assert GenerationState.ESCALATING in states

    def test_callback_errors_are_contained(self, make_config):
        coordinator = PatternCoordinator(make_config(size=4, bits=53), validate=False)

        def bad(_):
            raise RuntimeError("listener failed")

        coordinator.on_state_change(bad)
        coordinator.on_progress(bad)
        assert coordinator.generate().grid is not None


    @pytest.mark.slow
    @pytest.mark.parametrize("gamma", [0.25, 0.5, 0.75, 1.25, 1.5, 1.75])
    @pytest.mark.parametrize("alpha_pi", [1 / 6, 1 / 4, 1 / 2, 2 / 3])
    def test_acceptance_grid(self, make_config, gamma, alpha_pi):
        result = PatternCoordinator(make_config(gamma=gamma, alpha_pi=alpha_pi, size=30), n_cap=14).generate()
        reports = {r.check: r for r in result.validation.reports}
        assert set(reports) == {"kites", "orientation", "embedded", "angles", "sign"}
        for report in reports.values():
            assert report.status is not CheckStatus.FAIL, str(report)
        assert result.passed

    def test_result_defaults_are_independent(self, make_config):
        a = PatternResult(config=make_config(size=4, bits=53))
        b = PatternResult(config=make_config(size=4, bits=53))
        a.attempts.append((53, "accepted"))
        a.residuals["kite_spread"] = 0.0
        assert b.attempts == [] and b.residuals == {}
        assert a.field is None


class TestRunConfig:
    def test_summary(self, make_config):
        summary = run_config(make_config(size=6, bits=106), n_cap=4)
        assert summary['passed']
        assert summary['bits'] == 106
        assert summary['config']['gamma'] == 0.5
        assert summary['validation']['passed']

    def test_error_summary(self, make_config, monkeypatch):
        def broken(config):
            raise DegenerateQuad("forced", (1, 2))

        monkeypatch.setattr("zgamma.pattern.coordinator.generate_map", broken)
        summary = run_config(make_config(size=4, bits=53))
        assert not summary['passed']
        assert 'forced' in summary['error']
