from exception.error_convergence import ErrorConvergence
from exception.error_domain import ErrorDomain
from exception.error_execution import ErrorExecution
from exception.error_invalid_parameter import ErrorInvalidParameter
from scipy import special
import logging
import math

import numpy as np
import pytest


class TestBessel:

    def test_scaled_matches_unscaled(self, specfun):
        x = np.array([0.01, 0.5, 1.0, 7.5, 40.0])
        np.testing.assert_allclose(specfun.bessel_k_scaled(0, x), special.kv(0, x) * np.exp(x), rtol=1e-12)
        np.testing.assert_allclose(specfun.bessel_k_scaled(1, x), special.kv(1, x) * np.exp(x), rtol=1e-12)

    def test_log_bessel_large_argument(self, specfun):
        x = 800.0
        expected = 0.5 * math.log(math.pi / (2.0 * x)) - x + math.log1p(-1.0 / (8.0 * x))
        assert specfun.log_bessel_k(0, x) == pytest.approx(expected, abs=1e-6)

    def test_scalar_in_scalar_out(self, specfun):
        assert isinstance(specfun.bessel_k_scaled(1, 2.0), float)

    @pytest.mark.parametrize('order, x', [(0, 0.0), (1, -1.0), (0, math.inf), (2, 1.0)])
    def test_domain(self, specfun, order, x):
        with pytest.raises(ErrorDomain):
            specfun.bessel_k_scaled(order, x)


class TestErfAndNormal:

    def test_erf_odd_and_bounded(self, specfun):
        x = np.linspace(-6.0, 6.0, 101)
        np.testing.assert_allclose(specfun.erf(-x), -specfun.erf(x), rtol=0.0, atol=1e-15)
        assert np.all(np.abs(specfun.erf(x)) <= 1.0)
        assert specfun.erf(0.5) == pytest.approx(math.erf(0.5), abs=1e-15)

    def test_normal_cdf_tail(self, specfun):
        assert specfun.std_normal_cdf(0.0) == 0.5
        assert 0.0 < specfun.std_normal_cdf(-37.0) < 1e-290

    def test_normal_pdf(self, specfun):
        assert specfun.std_normal_pdf(0.0) == pytest.approx(1.0 / math.sqrt(2.0 * math.pi))

    def test_non_finite(self, specfun):
        with pytest.raises(ErrorDomain):
            specfun.erf(math.nan)


class TestQuadrature:

    def test_hermite_weights_and_exactness(self, specfun):
        rule = specfun.gauss_hermite_rule(20)
        assert rule.order == 20
        assert np.all(np.diff(rule.nodes) > 0.0)
        assert rule.weights.sum() == pytest.approx(math.sqrt(math.pi), rel=1e-13)
        assert rule.integrate(rule.nodes ** 4) == pytest.approx(0.75 * math.sqrt(math.pi), rel=1e-12)

    @pytest.mark.parametrize('order', [1, 513])
    def test_hermite_order_range(self, specfun, order):
        with pytest.raises(ErrorInvalidParameter):
            specfun.gauss_hermite_rule(order)

    def test_normal_expectation(self, specfun):
        assert specfun.normal_expectation(lambda w: w * w, 32) == pytest.approx(1.0, rel=1e-13)
        assert specfun.normal_expectation(lambda w: np.cos(w), 64) == pytest.approx(math.exp(-0.5), rel=1e-12)

    def test_adaptive_finite_and_infinite(self, specfun):
        value, err = specfun.integrate_adaptive(np.sin, 0.0, math.pi)
        assert value == pytest.approx(2.0, abs=1e-12)
        assert err <= 1e-10
        value, _ = specfun.integrate_adaptive(lambda x: np.exp(-x), 0.0, math.inf)
        assert value == pytest.approx(1.0, abs=1e-10)
        value, _ = specfun.integrate_adaptive(lambda x: np.exp(-x * x), -math.inf, math.inf)
        assert value == pytest.approx(math.sqrt(math.pi), abs=1e-10)

    def test_adaptive_vector_integrand(self, specfun):
        value, _ = specfun.integrate_adaptive(lambda x: np.array([1.0, x, x * x]), 0.0, 1.0)
        np.testing.assert_allclose(value, [1.0, 0.5, 1.0 / 3.0], atol=1e-12)

    def test_adaptive_non_finite_integrand(self, specfun):
        with pytest.raises(ErrorDomain):
            specfun.integrate_adaptive(lambda x: np.nan, 0.0, 1.0)

    def test_adaptive_wraps_integrand_failure(self, specfun, caplog):
        def broken(x):
            raise ValueError('integrando quebrado')

        with caplog.at_level(logging.ERROR, logger='SpecfunService'):
            with pytest.raises(ErrorExecution) as info:
                specfun.integrate_adaptive(broken, 0.0, 1.0)
        assert isinstance(info.value.__cause__, ValueError)
        assert info.value.details['interval'] == (0.0, 1.0)
        assert any('integrando quebrado' in record.getMessage() for record in caplog.records)

    def test_adaptive_invalid_interval(self, specfun):
        with pytest.raises(ErrorDomain):
            specfun.integrate_adaptive(np.sin, 1.0, 0.0)

    def test_adaptive_budget(self, specfun):
        with pytest.raises(ErrorConvergence) as info:
            specfun.integrate_adaptive(lambda x: 1.0 / np.sqrt(x), 0.0, 1.0, tol=1e-14, max_panels=1)
        value, err = info.value.best_estimate
        assert value > 0.0 and err > 0.0
