from exception.error_domain import ErrorDomain
from exception.error_invalid_parameter import ErrorInvalidParameter
from model.bs_params import BivBsParams, BsParams
from scipy import stats
from service.bivariate_bs_service import BivariateBsService

import numpy as np
import pytest


@pytest.fixture
def service():
    return BivariateBsService()


@pytest.fixture
def marginal():
    return BsParams(0.7, 1.3)


class TestTransform:

    def test_zero_at_beta(self, service, marginal):
        assert service.a_transform(marginal.beta, marginal) == pytest.approx(0.0, abs=1e-15)

    def test_inverse_round_trip(self, service, marginal):
        t = np.geomspace(1e-4, 1e4, 41)
        np.testing.assert_allclose(service.a_inverse(service.a_transform(t, marginal), marginal), t, rtol=1e-12)

    def test_inverse_far_left_tail(self, service, marginal):
        value = service.a_inverse(-1e8, marginal)
        assert 0.0 < value < 1e-15

    def test_derivative_matches_finite_difference(self, service, marginal):
        t = np.array([0.2, 1.0, 5.0])
        h = 1e-6 * t
        numeric = (service.a_transform(t + h, marginal) - service.a_transform(t - h, marginal)) / (2.0 * h)
        np.testing.assert_allclose(service.a_derivative(t, marginal), numeric, rtol=1e-7)
        np.testing.assert_allclose(service.log_a_derivative(t, marginal), np.log(service.a_derivative(t, marginal)), rtol=1e-12)

    @pytest.mark.parametrize('t', [0.0, -1.0])
    def test_domain(self, service, marginal, t):
        with pytest.raises(ErrorDomain):
            service.a_transform(t, marginal)


class TestMarginal:

    def test_matches_fatigue_life(self, service, marginal):
        t = np.geomspace(0.05, 20.0, 30)
        np.testing.assert_allclose(service.bs_pdf(t, marginal), stats.fatiguelife.pdf(t, marginal.alpha, scale=marginal.beta), rtol=1e-10)
        np.testing.assert_allclose(service.bs_cdf(t, marginal), stats.fatiguelife.cdf(t, marginal.alpha, scale=marginal.beta), rtol=1e-10)

    def test_median_is_beta(self, service, marginal):
        assert service.bs_cdf(marginal.beta, marginal) == pytest.approx(0.5, abs=1e-15)

    def test_invalid_parameters(self):
        with pytest.raises(ErrorInvalidParameter):
            BsParams(0.0, 1.0)


class TestBivariate:

    def test_independent_factorizes(self, service):
        p = BivBsParams(BsParams(0.5, 1.0), BsParams(1.2, 2.0), 0.0)
        x, y = np.array([0.5, 1.0, 3.0]), np.array([1.5, 0.7, 2.0])
        np.testing.assert_allclose(service.biv_bs_pdf(x, y, p), service.bs_pdf(x, p.x) * service.bs_pdf(y, p.y), rtol=1e-12)
        np.testing.assert_allclose(service.conditional_cdf_x_given_y(x, y, p), service.bs_cdf(x, p.x), rtol=1e-12)

    def test_joint_matches_normal_copula(self, service):
        p = BivBsParams(BsParams(0.5, 1.0), BsParams(0.8, 1.5), 0.6)
        x, y = 1.3, 0.9
        ax, ay = service.a_transform(x, p.x), service.a_transform(y, p.y)
        normal = stats.multivariate_normal(mean=[0.0, 0.0], cov=[[1.0, 0.6], [0.6, 1.0]]).pdf([ax, ay])
        expected = normal * service.a_derivative(x, p.x) * service.a_derivative(y, p.y)
        assert service.biv_bs_pdf(x, y, p) == pytest.approx(expected, rel=1e-10)

    def test_rho_out_of_range(self):
        with pytest.raises(ErrorInvalidParameter):
            BivBsParams(BsParams(0.5, 1.0), BsParams(0.5, 1.0), 1.0)
