from exception.error_domain import ErrorDomain
from exception.error_unsupported_parameter import ErrorUnsupportedParameter
from model.modality_report import CriticalKind, Modality
from model.ubbs1_params import Ubbs1Params
from service.bivariate_bs_service import BivariateBsService
import math

import numpy as np
import pytest

SWEEP = [
    Ubbs1Params(0.5, 0.5, 1.0, 1.0, 0.0),
    Ubbs1Params(0.5, 0.5, 1.0, 1.0, 0.25),
    Ubbs1Params(1.6, 0.7, 1.1, 0.9, 0.6),
    Ubbs1Params(0.2, 0.2, 1.0, 1.0, 0.95),
    Ubbs1Params(0.3, 0.8, 2.0, 0.5, -0.4),
    Ubbs1Params(1.0, 1.5, 0.7, 1.3, -0.95),
]


def _random_params(rng, count, equal_betas=False):
    params = []
    for _ in range(count):
        a1, a2 = rng.uniform(0.2, 2.0, size=2)
        b1, b2 = rng.uniform(0.5, 2.0, size=2)
        params.append(Ubbs1Params(a1, a2, b1, b1 if equal_betas else b2, rng.uniform(-0.9, 0.9)))
    return params


class TestDensity:

    def test_mirror_symmetry_with_equal_betas(self, ubbs1):
        p = Ubbs1Params(0.5, 0.5, 1.0, 1.0, 0.3)
        assert ubbs1.log_pdf(0.25, p) == pytest.approx(ubbs1.log_pdf(0.75, p), abs=1e-12)
        w = np.linspace(0.0, 0.49, 50)
        for q in _random_params(np.random.default_rng(3), 5, equal_betas=True):
            np.testing.assert_allclose(ubbs1.pdf(0.5 - w, q), ubbs1.pdf(0.5 + w, q), rtol=1e-10)

    def test_independent_closed_form(self, ubbs1, symmetric_params):
        z = np.array([0.2, 0.5, 0.8])
        np.testing.assert_allclose(ubbs1.pdf(z, symmetric_params), ubbs1.independent_pdf(z, symmetric_params), rtol=1e-10)
        q = Ubbs1Params(0.3, 1.2, 2.0, 0.5, 0.0)
        z = np.linspace(0.01, 0.99, 25)
        np.testing.assert_allclose(ubbs1.pdf(z, q), ubbs1.independent_pdf(z, q), rtol=1e-10)

    def test_independent_requires_zero_rho(self, ubbs1, correlated_params):
        with pytest.raises(ErrorUnsupportedParameter):
            ubbs1.independent_pdf(0.5, correlated_params)

    @pytest.mark.parametrize('p', SWEEP[:3])
    def test_matches_integral_representation(self, ubbs1, specfun, p):
        bivariate = BivariateBsService()
        joint = p.bivariate()
        for z in (0.15, 0.4, 0.5, 0.83):
            s = (1.0 - z) / z
            value, _ = specfun.integrate_adaptive(lambda y: y * bivariate.biv_bs_pdf(s * y, y, joint), 0.0, math.inf,
                                                  tol=1e-13, rel_tol=1e-10)
            assert ubbs1.pdf(z, p) == pytest.approx(value / (z * z), rel=1e-7)

    @pytest.mark.parametrize('p', SWEEP)
    def test_normalization(self, ubbs1, specfun, p):
        value, _ = specfun.integrate_adaptive(lambda z: ubbs1.pdf(z, p), 0.0, 1.0, tol=1e-10)
        assert value == pytest.approx(1.0, abs=1e-7)

    def test_endpoint_decay(self, ubbs1, symmetric_params):
        assert ubbs1.pdf(1e-12, symmetric_params) < 1e-6
        assert ubbs1.pdf(1.0 - 1e-12, symmetric_params) < 1e-6

    def test_log_space_stability(self, ubbs1):
        p = Ubbs1Params(0.2, 0.2, 1.0, 1.0, 0.95)
        values = ubbs1.log_pdf(np.linspace(0.3, 0.7, 21), p)
        assert np.all(np.isfinite(values))

    @pytest.mark.parametrize('z', [0.0, 1.0, -0.5, math.nan])
    def test_domain(self, ubbs1, symmetric_params, z):
        with pytest.raises(ErrorDomain):
            ubbs1.pdf(z, symmetric_params)

    def test_uv_intermediates(self, ubbs1):
        p = Ubbs1Params(0.5, 0.8, 1.2, 0.9, 0.0)
        uv = ubbs1.uv_intermediates(0.5, p)
        assert uv.s == pytest.approx(1.0)
        assert uv.u_rho == pytest.approx(1.0 / (0.25 * 1.2) + 1.0 / (0.64 * 0.9), rel=1e-12)
        near_one = ubbs1.uv_intermediates(0.3, p.replace(rho=1.0 - 1e-9))
        assert near_one.u_rho > 0.0 and near_one.v_rho > 0.0


class TestTypeTwoRatio:

    def test_change_of_variables(self, ubbs1, symmetric_params):
        for s in (0.5, 1.0, 2.0):
            expected = ubbs1.pdf(1.0 / (s + 1.0), symmetric_params) / (s + 1.0) ** 2
            assert ubbs1.type2_ratio_pdf(s, symmetric_params) == pytest.approx(expected, rel=1e-12)

    def test_normalization(self, ubbs1, specfun):
        p = Ubbs1Params(0.5, 0.9, 1.0, 1.4, 0.0)
        value, _ = specfun.integrate_adaptive(lambda s: ubbs1.type2_ratio_pdf(s, p), 0.0, math.inf, tol=1e-10)
        assert value == pytest.approx(1.0, abs=1e-7)

    def test_median_at_one(self, ubbs1, symmetric_params):
        assert ubbs1.type2_ratio_cdf(1.0, symmetric_params) == pytest.approx(0.5, abs=1e-9)

    def test_correlated_unsupported(self, ubbs1, correlated_params):
        with pytest.raises(ErrorUnsupportedParameter):
            ubbs1.type2_ratio_pdf(1.0, correlated_params)
        with pytest.raises(ErrorUnsupportedParameter):
            ubbs1.type2_ratio_cdf(1.0, correlated_params)

    def test_non_positive(self, ubbs1, symmetric_params):
        with pytest.raises(ErrorDomain):
            ubbs1.type2_ratio_pdf(0.0, symmetric_params)


class TestCdf:

    def test_half_with_equal_betas(self, ubbs1):
        for p in _random_params(np.random.default_rng(5), 10, equal_betas=True):
            assert ubbs1.cdf(0.5, p) == pytest.approx(0.5, abs=1e-9)

    def test_nondecreasing_and_limits(self, ubbs1, bimodal_params):
        z = np.linspace(0.001, 0.999, 400)
        values = ubbs1.cdf(z, bimodal_params)
        assert np.all(np.diff(values) >= -1e-9)
        assert ubbs1.cdf(1e-9, bimodal_params) < 0.05
        assert ubbs1.cdf(1.0 - 1e-9, bimodal_params) > 0.95

    @pytest.mark.parametrize('p', SWEEP[1:3])
    def test_integral_of_density(self, ubbs1, specfun, p):
        for z in (0.3, 0.5, 0.7):
            value, _ = specfun.integrate_adaptive(lambda x: ubbs1.pdf(x, p), 0.0, z, tol=1e-12)
            assert ubbs1.cdf(z, p) == pytest.approx(value, abs=1e-8)

    def test_survival_complements(self, ubbs1, bimodal_params):
        z = np.linspace(0.05, 0.95, 19)
        np.testing.assert_allclose(ubbs1.cdf(z, bimodal_params) + ubbs1.survival(z, bimodal_params), 1.0, atol=1e-9)

    def test_explicit_order(self, ubbs1, correlated_params):
        assert ubbs1.cdf(0.4, correlated_params, order=32) == pytest.approx(ubbs1.cdf(0.4, correlated_params), abs=1e-9)

    def test_order_from_environment(self, ubbs1, correlated_params, monkeypatch):
        baseline = ubbs1.cdf(0.4, correlated_params)
        monkeypatch.setenv('UBBS1_QUAD_ORDER', '128')
        assert ubbs1.cdf(0.4, correlated_params) == pytest.approx(baseline, abs=1e-9)


class TestQuantile:

    def test_median_with_equal_betas(self, ubbs1):
        for p in _random_params(np.random.default_rng(9), 5, equal_betas=True):
            assert ubbs1.quantile(0.5, p) == pytest.approx(0.5, abs=1e-8)

    @pytest.mark.parametrize('q', [0.05, 0.5, 0.95])
    def test_round_trip(self, ubbs1, bimodal_params, q):
        assert ubbs1.cdf(ubbs1.quantile(q, bimodal_params), bimodal_params) == pytest.approx(q, abs=1e-10)

    def test_monotone(self, ubbs1, correlated_params):
        values = [ubbs1.quantile(q, correlated_params) for q in np.linspace(0.01, 0.99, 99)]
        assert np.all(np.diff(values) > 0.0)

    @pytest.mark.parametrize('q', [0.0, 1.0, 1.5])
    def test_domain(self, ubbs1, symmetric_params, q):
        with pytest.raises(ErrorDomain):
            ubbs1.quantile(q, symmetric_params)


class TestMoments:

    def test_mean_with_equal_betas(self, ubbs1):
        assert ubbs1.moment(1, Ubbs1Params(1.2, 0.4, 1.5, 1.5, 0.3)) == pytest.approx(0.5, abs=1e-6)

    def test_decreasing_in_order(self, ubbs1, bimodal_params):
        values = ubbs1.moments(range(1, 6), bimodal_params)
        assert all(0.0 < value < 1.0 for value in values)
        assert np.all(np.diff(values) < 0.0)

    def test_mean_matches_density(self, ubbs1, specfun, bimodal_params):
        value, _ = specfun.integrate_adaptive(lambda z: z * ubbs1.pdf(z, bimodal_params), 0.0, 1.0, tol=1e-11)
        assert ubbs1.moment(1, bimodal_params) == pytest.approx(value, abs=1e-7)

    @pytest.mark.parametrize('n', [0, -1, 1.5])
    def test_invalid_order(self, ubbs1, symmetric_params, n):
        with pytest.raises(ErrorDomain):
            ubbs1.moment(n, symmetric_params)

    @pytest.mark.parametrize('rho', [0.5, 0.9])
    def test_negative_rho_spreads_mass(self, ubbs1, rho):
        positive = ubbs1.moments([1, 2], Ubbs1Params(1.0, 1.0, 1.0, 1.0, rho))
        negative = ubbs1.moments([1, 2], Ubbs1Params(1.0, 1.0, 1.0, 1.0, -rho))
        assert positive[0] == pytest.approx(0.5, abs=1e-6)
        assert negative[0] == pytest.approx(0.5, abs=1e-6)
        # A mesma média com segundo momento maior: -rho afasta Z de 1/2, +rho o concentra.
        assert negative[1] > positive[1]

    @pytest.mark.slow
    @pytest.mark.parametrize('rho, expected', [
        (0.0, [0.500, 0.286, 0.178, 0.119, 0.083, 0.060, 0.044, 0.034, 0.026, 0.020]),
        (0.5, [0.500, 0.279, 0.168, 0.108, 0.072, 0.050, 0.036, 0.026, 0.019, 0.015]),
        (0.9, [0.500, 0.259, 0.139, 0.076, 0.043, 0.025, 0.015, 0.009, 0.005, 0.003]),
    ])
    def test_moment_table(self, ubbs1, rho, expected):
        values = ubbs1.moments(range(1, 11), Ubbs1Params(1.0, 1.0, 1.0, 1.0, rho))
        np.testing.assert_allclose(values, expected, atol=0.0015)


class TestMgf:

    def test_zero(self, ubbs1, bimodal_params):
        assert ubbs1.mgf(0.0, bimodal_params) == 1.0

    @pytest.mark.parametrize('t', [51.0, -60.0, math.inf])
    def test_domain(self, ubbs1, symmetric_params, t):
        with pytest.raises(ErrorDomain):
            ubbs1.mgf(t, symmetric_params)

    @pytest.mark.slow
    def test_matches_direct_integral(self, ubbs1, specfun):
        p = Ubbs1Params(1.0, 1.0, 1.0, 1.0, 0.0)
        value, _ = specfun.integrate_adaptive(lambda z: np.exp(z) * ubbs1.pdf(z, p), 0.0, 1.0, tol=1e-11)
        assert ubbs1.mgf(1.0, p) == pytest.approx(value, abs=1e-6)


class TestStressStrength:

    def test_equal_betas_give_half(self, ubbs1):
        for p in _random_params(np.random.default_rng(1), 20, equal_betas=True):
            assert ubbs1.stress_strength(p) == pytest.approx(0.5, abs=1e-9)

    def test_complement_and_routes(self, ubbs1):
        for p in _random_params(np.random.default_rng(2), 5):
            direct = ubbs1.stress_strength(p)
            assert direct + ubbs1.stress_strength(p.reflected()) == pytest.approx(1.0, abs=1e-9)
            assert ubbs1.stress_strength(p, route='cdf') == pytest.approx(direct, abs=1e-9)

    def test_unknown_route(self, ubbs1, symmetric_params):
        with pytest.raises(ErrorDomain):
            ubbs1.stress_strength(symmetric_params, route='monte-carlo')

    @pytest.mark.slow
    def test_matches_bivariate_draws(self, ubbs1, sampling):
        p = Ubbs1Params(0.5, 0.5, 1.0, 1.5, 0.25)
        pairs = sampling.sample_bivariate_bs(10 ** 6, p.bivariate(), sampling.rng(2024))
        assert ubbs1.stress_strength(p) == pytest.approx(np.mean(pairs[:, 0] < pairs[:, 1]), abs=3e-3)


class TestModality:

    def test_bimodal(self, ubbs1, bimodal_params):
        report = ubbs1.classify_modality(bimodal_params)
        assert report.kind == Modality.BIMODAL
        assert [point.kind for point in report.critical_points] == [CriticalKind.MAX, CriticalKind.MIN, CriticalKind.MAX]
        assert len(report.modes) == 2

    def test_unimodal(self, ubbs1):
        report = ubbs1.classify_modality(Ubbs1Params(0.5, 0.7, 1.1, 0.9, 0.6))
        assert report.kind == Modality.UNIMODAL

    def test_symmetric_mode_at_half(self, ubbs1, symmetric_params):
        report = ubbs1.classify_modality(symmetric_params)
        assert report.modes == [pytest.approx(0.5, abs=1e-6)]

    def test_reflection_mirrors_modes(self, ubbs1, bimodal_params):
        modes = ubbs1.classify_modality(bimodal_params).modes
        mirrored = ubbs1.classify_modality(bimodal_params.reflected()).modes
        np.testing.assert_allclose(sorted(1.0 - np.array(mirrored)), modes, atol=1e-6)

    def test_grid_too_small(self, ubbs1, symmetric_params):
        with pytest.raises(ErrorDomain):
            ubbs1.classify_modality(symmetric_params, grid_size=100)

    def test_serializes(self, ubbs1, bimodal_params):
        payload = ubbs1.classify_modality(bimodal_params).to_dict()
        assert payload['kind'] == 'bimodal'
        assert payload['critical_points'][1]['kind'] == 'min'
