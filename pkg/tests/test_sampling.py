from exception.error_domain import ErrorDomain
from exception.error_invalid_parameter import ErrorInvalidParameter
from model.bs_params import BsParams
from model.ratio_convention import RatioConvention
from model.rng_state import RngState
from model.ubbs1_params import Ubbs1Params
from scipy import stats
from service.bivariate_bs_service import BivariateBsService
import math

import numpy as np
import pytest

# Valor crítico assintótico de Kolmogorov-Smirnov a 5%, multiplicado por 1/sqrt(n).
KS_CRITICAL_5 = 1.36

KS_CASES = [
    Ubbs1Params(0.5, 0.5, 1.0, 1.0, 0.0),
    Ubbs1Params(0.5, 0.5, 1.0, 1.0, 0.25),
    Ubbs1Params(1.6, 0.7, 1.1, 0.9, 0.6),
    Ubbs1Params(0.3, 0.8, 2.0, 0.5, -0.4),
]


class TestStreams:

    def test_same_seed_same_draws(self, sampling):
        first = sampling.sample_bivariate_normal(100, 0.3, sampling.rng(11))
        second = sampling.sample_bivariate_normal(100, 0.3, sampling.rng(11))
        np.testing.assert_array_equal(first, second)

    def test_split_streams_are_distinct_and_stable(self, sampling):
        streams = sampling.split_streams(5, 3)
        assert [s.stream for s in streams] == [(0,), (1,), (2,)]
        draws = [s.generator.standard_normal(4) for s in streams]
        assert not np.array_equal(draws[0], draws[1])
        np.testing.assert_array_equal(RngState(5).spawn(2).generator.standard_normal(4), draws[2])

    @pytest.mark.parametrize('seed', [-1, 2 ** 64, 1.5])
    def test_invalid_seed(self, seed):
        with pytest.raises(ErrorInvalidParameter):
            RngState(seed)


class TestBivariateNormal:

    def test_correlation_and_shape(self, sampling):
        pairs = sampling.sample_bivariate_normal(10 ** 5, 0.6, sampling.rng(1))
        assert pairs.shape == (10 ** 5, 2)
        assert np.corrcoef(pairs.T)[0, 1] == pytest.approx(0.6, abs=0.01)
        np.testing.assert_allclose(pairs.std(axis=0), 1.0, atol=0.01)

    def test_rho_out_of_range(self, sampling):
        with pytest.raises(ErrorInvalidParameter):
            sampling.sample_bivariate_normal(10, 1.0, sampling.rng(1))

    @pytest.mark.parametrize('n', [0, -3, 2.5])
    def test_invalid_count(self, sampling, n):
        with pytest.raises(ErrorDomain):
            sampling.sample_bivariate_normal(n, 0.0, sampling.rng(1))


class TestNormalToBs:

    def test_zero_maps_to_beta(self, sampling):
        assert sampling.normal_to_bs(0.0, BsParams(0.8, 2.5)) == pytest.approx(2.5, rel=1e-15)

    def test_inverts_a_transform(self, sampling):
        p = BsParams(0.8, 2.5)
        x = np.linspace(-10.0, 10.0, 41)
        np.testing.assert_allclose(BivariateBsService().a_transform(sampling.normal_to_bs(x, p), p), x, atol=1e-9)

    def test_non_finite_input(self, sampling):
        with pytest.raises(ErrorDomain):
            sampling.normal_to_bs(np.inf, BsParams(0.8, 2.5))

    def test_positive_in_left_tail(self, sampling):
        assert sampling.normal_to_bs(-1e6, BsParams(2.0, 1.0)) > 0.0

    def test_marginal_law(self, sampling):
        p = BsParams(0.5, 1.5)
        draws = sampling.normal_to_bs(sampling.rng(8).generator.standard_normal(20000), p)
        statistic = stats.kstest(draws, stats.fatiguelife(p.alpha, scale=p.beta).cdf).statistic
        assert statistic < KS_CRITICAL_5 / math.sqrt(draws.size)


class TestUbbs1Sampler:

    def test_values_inside_unit_interval(self, draw, symmetric_params):
        sample = draw(symmetric_params, 10000, 3)
        assert sample.n == 10000
        assert np.all((sample.values > 0.0) & (sample.values < 1.0))
        assert np.mean(sample.values) == pytest.approx(0.5, abs=0.01)

    def test_deterministic(self, draw, bimodal_params):
        np.testing.assert_array_equal(draw(bimodal_params, 50, 42).values, draw(bimodal_params, 50, 42).values)
        assert not np.array_equal(draw(bimodal_params, 50, 42).values, draw(bimodal_params, 50, 43).values)

    def test_algorithm_convention_is_reflection(self, sampling, bimodal_params):
        density = sampling.sample_ubbs1(500, bimodal_params, sampling.rng(4))
        algorithm = sampling.sample_ubbs1(500, bimodal_params, sampling.rng(4), convention=RatioConvention.ALGORITHM)
        np.testing.assert_allclose(algorithm.values, 1.0 - density.values, atol=1e-12)
        assert 'convention=algorithm' in algorithm.source

    def test_invalid_count(self, sampling, symmetric_params):
        with pytest.raises(ErrorDomain):
            sampling.sample_ubbs1(0, symmetric_params, sampling.rng(1))

    @pytest.mark.parametrize('p', KS_CASES)
    def test_matches_cdf(self, sampling, ubbs1, p):
        sample = sampling.sample_ubbs1(20000, p, sampling.rng(2718))
        statistic = stats.kstest(sample.values, lambda z: ubbs1.cdf(z, p)).statistic
        assert statistic < KS_CRITICAL_5 / math.sqrt(sample.n)

    @pytest.mark.slow
    def test_matches_cdf_large(self, sampling, ubbs1, bimodal_params):
        sample = sampling.sample_ubbs1(10 ** 5, bimodal_params, sampling.rng(99))
        statistic = stats.kstest(sample.values, lambda z: ubbs1.cdf(z, bimodal_params)).statistic
        assert statistic < KS_CRITICAL_5 / math.sqrt(sample.n)
