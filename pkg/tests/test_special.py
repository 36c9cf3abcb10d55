"""
Tests for Gamma ratios, the Gauss series and Stirling's approximation.
"""

import math

import pytest

from zgamma.errors import ConfigError, NoConvergence, PoleError
from zgamma.special import (
    GammaRatioQuery,
    HypergeometricParams,
    gamma_ratio,
    gauss_equation_residual,
    gauss_series,
    hyp2f1,
    hyp2f1_reference,
    s_series,
    s_series_pochhammer,
    stirling_gamma,
)


class TestGammaRatio:
    def test_trivial(self, ctx53):
        assert float(gamma_ratio(GammaRatioQuery(1, 1), ctx53)) == pytest.approx(1.0, rel=1e-15)

    def test_functional_equation(self, ctx53):
        assert float(gamma_ratio(GammaRatioQuery(0.5, 2), ctx53)) == pytest.approx(0.75, rel=1e-14)

    def test_large_argument_power_law(self, ctx212):
        value = gamma_ratio(GammaRatioQuery(1e6, 0.3), ctx212)
        assert float(value) == pytest.approx(1e6 ** 0.3, rel=1e-6)

    def test_negative_non_integer(self, ctx53):
        # Gamma(-0.5 + 1) / Gamma(-0.5) = -0.5
        assert float(gamma_ratio(GammaRatioQuery(-0.5, 1), ctx53)) == pytest.approx(-0.5, rel=1e-14)

    @pytest.mark.parametrize("x, m", [(0, 1), (-2, 0.5), (0.5, -1.5)])
    def test_poles(self, ctx53, x, m):
        with pytest.raises(PoleError):
            gamma_ratio(GammaRatioQuery(x, m), ctx53)


class TestGaussSeries:
    def test_constant_term(self, ctx53):
        assert hyp2f1(HypergeometricParams(0.3, 0.7, 1.1, 0), ctx53).value == 1

    def test_terminating_b_zero(self, ctx53):
        res = hyp2f1(HypergeometricParams(1.25, 0, 0.5, 0.9), ctx53)
        assert res.value == 1
        assert res.converged

    def test_log_identity(self, ctx212):
        res = hyp2f1(HypergeometricParams(1, 1, 2, 0.5), ctx212)
        assert abs(res.value - 2 * ctx212.mp.log(2)) < 1e-55

    @pytest.mark.parametrize("a, b, c, z", [
        (1.25, -0.25, 1.5, 0.3),
        (0.5, 0.75, 0.5, -0.6),
        (1.75, 0.25, 1.5, 0.85),
    ])
    def test_matches_reference(self, ctx212, a, b, c, z):
        ours = gauss_series(HypergeometricParams(a, b, c, z), ctx212).value
        ref = hyp2f1_reference(a, b, c, z, ctx212)
        assert abs(ours - ref) < 1e-55 * abs(ref)

    def test_derivative(self, ctx212):
        z = ctx212.mpf(0.4)
        res = gauss_series(HypergeometricParams(0.5, 0.5, 1.5, z), ctx212, derivative=True)
        mp = ctx212.mp
        ref = mp.diff(lambda x: mp.hyp2f1(0.5, 0.5, 1.5, x), z)
        assert abs(res.derivative - ref) < 1e-40

    def test_gauss_equation(self, ctx212):
        residual = gauss_equation_residual(HypergeometricParams(1.25, -0.25, 1.5, 0.35), ctx212)
        assert residual < 1e-20

    def test_pole_in_c(self, ctx53):
        with pytest.raises(PoleError):
            hyp2f1(HypergeometricParams(1, 1, -2, 0.5), ctx53)

    def test_outside_disc(self, ctx53):
        with pytest.raises(ConfigError):
            hyp2f1(HypergeometricParams(1, 1, 2, 1.0), ctx53)

    def test_term_cap(self, ctx53):
        params = HypergeometricParams(1, 1, 2, 0.999, max_terms=10)
        with pytest.raises(NoConvergence) as info:
            hyp2f1(params, ctx53)
        assert info.value.terms == 10
        assert not hyp2f1(params, ctx53, strict=False).converged


class TestSSeries:
    def test_origin(self, ctx53):
        assert s_series(0.5, 0, ctx53) == 1

    @pytest.mark.parametrize("z", [0.1, 0.5, 0.9])
    def test_gamma_one(self, ctx53, z):
        assert s_series(1, z, ctx53) == 1

    def test_two_codings_agree(self, ctx212):
        a = s_series(0.5, 0.25, ctx212)
        b = s_series_pochhammer(0.5, 0.25, ctx212)
        assert abs(a - b) < 1e-55


class TestStirling:
    def test_factorial(self, ctx53):
        assert float(stirling_gamma(10, ctx53)) == pytest.approx(362880, rel=1e-2)

    def test_log_gamma(self, ctx53):
        assert float(stirling_gamma(100, ctx53)) == pytest.approx(float(ctx53.mp.gamma(100)), rel=1e-3)

    def test_ratio_power_law(self, ctx53):
        x, m = 1000.0, 0.5
        ratio = stirling_gamma(x + m, ctx53) / stirling_gamma(x, ctx53)
        assert float(ratio) == pytest.approx(math.sqrt(x), rel=1e-3)
