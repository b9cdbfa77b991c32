from cli import cli
from click.testing import CliRunner
import json
import math
import os

import numpy as np
import pandas as pd
import pytest

SYMMETRIC = '0.5,0.5,1,1,0'
BIMODAL = '1.6,0.7,1.1,0.9,0.6'


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def invoke(runner):
    def _invoke(*args):
        return runner.invoke(cli, [str(arg) for arg in args], catch_exceptions=False)
    return _invoke


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding='utf-8')
    return str(path)


def _read_json(path):
    with open(path, encoding='utf-8') as handle:
        return json.load(handle)


class TestTabulation:

    def test_pdf(self, invoke, tmp_path):
        out = tmp_path / 'pdf.csv'
        result = invoke('pdf', '--params', SYMMETRIC, '--grid', '0.01:0.99:99', '-o', out)
        assert result.exit_code == 0
        table = pd.read_csv(out)
        assert list(table.columns) == ['z', 'value']
        assert len(table) == 99
        assert (table['value'] > 0.0).all()
        np.testing.assert_allclose(table['value'].to_numpy(), table['value'].to_numpy()[::-1], rtol=1e-9)

    def test_cdf_json(self, invoke, tmp_path):
        out = tmp_path / 'cdf.json'
        assert invoke('cdf', '--params', BIMODAL, '--grid', '0.05:0.95:19', '--format', 'json', '-o', out).exit_code == 0
        values = [row['value'] for row in _read_json(out)]
        assert len(values) == 19
        assert np.all(np.diff(values) >= 0.0)

    def test_quantile(self, invoke, tmp_path):
        out = tmp_path / 'q.csv'
        assert invoke('quantile', '--params', SYMMETRIC, '--grid', '0.25:0.75:3', '-o', out).exit_code == 0
        assert pd.read_csv(out)['value'][1] == pytest.approx(0.5, abs=1e-8)

    def test_moments(self, invoke, tmp_path):
        out = tmp_path / 'm.csv'
        assert invoke('moments', '--params', SYMMETRIC, '--orders', '1,2', '-o', out).exit_code == 0
        table = pd.read_csv(out)
        assert list(table['n']) == [1, 2]
        assert table['value'][0] == pytest.approx(0.5, abs=1e-6)

    def test_stress_and_modality(self, invoke, tmp_path):
        stress_out, modality_out = tmp_path / 'r.json', tmp_path / 'mod.json'
        assert invoke('stress', '--params', SYMMETRIC, '--route', 'cdf', '-o', stress_out).exit_code == 0
        assert _read_json(stress_out)['stress_strength'] == pytest.approx(0.5, abs=1e-9)
        assert invoke('modality', '--params', BIMODAL, '-o', modality_out).exit_code == 0
        assert _read_json(modality_out)['kind'] == 'bimodal'

    @pytest.mark.parametrize('args', [
        ['pdf', '--params', SYMMETRIC, '--grid', '0:1:10'],
        ['pdf', '--params', SYMMETRIC, '--grid', 'a:b:c'],
        ['pdf', '--params', '0.5,0.5,1,1,1', '--grid', '0.1:0.9:9'],
        ['pdf', '--params', '0.5,0.5,1', '--grid', '0.1:0.9:9'],
        ['moments', '--params', SYMMETRIC, '--orders', '0'],
        ['--order', '1', 'cdf', '--params', SYMMETRIC, '--grid', '0.1:0.9:9'],
    ])
    def test_usage_errors(self, invoke, args):
        assert invoke(*args).exit_code == 2

    def test_order_is_restored(self, invoke, tmp_path, monkeypatch):
        monkeypatch.delenv('UBBS1_QUAD_ORDER', raising=False)
        out = tmp_path / 'cdf.csv'
        assert invoke('--order', '32', 'cdf', '--params', BIMODAL, '--grid', '0.1:0.9:9', '-o', out).exit_code == 0
        assert 'UBBS1_QUAD_ORDER' not in os.environ


class TestSampling:

    def test_seed_is_required(self, invoke):
        assert invoke('sample', '--params', SYMMETRIC, '--n', 10).exit_code == 2

    def test_same_seed_same_file(self, invoke, tmp_path):
        first, second = tmp_path / 'a.csv', tmp_path / 'b.csv'
        for out in (first, second):
            assert invoke('sample', '--params', BIMODAL, '--n', 100, '--seed', 42, '-o', out).exit_code == 0
        assert first.read_text() == second.read_text()
        values = pd.read_csv(first)['z']
        assert len(values) == 100 and values.between(0.0, 1.0, inclusive='neither').all()

    def test_text_format(self, invoke, tmp_path):
        out = tmp_path / 's.txt'
        assert invoke('sample', '--params', SYMMETRIC, '--n', 5, '--seed', 1, '--format', 'text', '-o', out).exit_code == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 5
        assert 0.0 < float(lines[0]) < 1.0


class TestData:

    def test_fit_with_too_few_rows(self, invoke, tmp_path):
        path = _write(tmp_path, 'tiny.csv', 'z\n0.2\n0.4\n0.6\n')
        assert invoke('fit', '-i', path).exit_code == 1

    def test_fit_after_rejections(self, invoke, tmp_path):
        path = _write(tmp_path, 'bad.csv', 'z\n0.5\n-0.1\n0.7\n')
        assert invoke('fit', '-i', path).exit_code == 1

    def test_malformed_file(self, invoke, tmp_path):
        path = _write(tmp_path, 'nan.csv', 'z\n0.5\nfoo\n')
        assert invoke('describe', '-i', path).exit_code == 2

    def test_describe(self, invoke, tmp_path):
        path = _write(tmp_path, 'five.csv', '0.1\n0.2\n0.3\n0.4\n0.5\n')
        out = tmp_path / 'd.json'
        assert invoke('describe', '-i', path, '-o', out).exit_code == 0
        summary = _read_json(out)
        assert summary['n'] == 5
        assert summary['mean'] == pytest.approx(0.3)

    def test_compare_beta_only(self, invoke, tmp_path):
        values = np.random.default_rng(0).beta(2.0, 3.0, size=200)
        path = _write(tmp_path, 'beta.csv', 'z\n' + '\n'.join(repr(float(v)) for v in values) + '\n')
        out = tmp_path / 'cmp.json'
        assert invoke('compare', '-i', path, '--models', 'beta', '--format', 'json', '-o', out).exit_code == 0
        rows = _read_json(out)
        assert [row['model'] for row in rows] == ['beta']
        assert rows[0]['best_aic'] is True

    def test_compare_unknown_model(self, invoke, tmp_path):
        path = _write(tmp_path, 'z.csv', 'z\n0.2\n0.4\n')
        assert invoke('compare', '-i', path, '--models', 'weibull').exit_code == 2

    def test_prepare(self, invoke, tmp_path):
        path = _write(tmp_path, 'pairs.csv', 'x,y\n1,3\n0,0\n1,1\n')
        out = tmp_path / 'u.csv'
        assert invoke('prepare', '-i', path, '-o', out).exit_code == 0
        np.testing.assert_allclose(pd.read_csv(out)['z'], [0.25, 0.5])

    def test_fit_json(self, invoke, draw, symmetric_params, tmp_path):
        sample = draw(symmetric_params, 60, 3)
        path = _write(tmp_path, 'fit.csv', 'z\n' + '\n'.join(repr(float(v)) for v in sample.values) + '\n')
        out = tmp_path / 'fit.json'
        assert invoke('fit', '-i', path, '--init', SYMMETRIC, '-o', out).exit_code == 0
        payload = _read_json(out)
        assert payload['method'] == 'mle'
        assert payload['rejected_rows'] == 0
        assert set(payload) >= {'alpha1', 'alpha2', 'beta1', 'beta2', 'rho', 'loglik', 'aic', 'bic'}

    def test_fit_with_beta_scale(self, invoke, draw, symmetric_params, tmp_path):
        sample = draw(symmetric_params, 60, 4)
        path = _write(tmp_path, 'scale.csv', 'z\n' + '\n'.join(repr(float(v)) for v in sample.values) + '\n')
        out = tmp_path / 'scale.json'
        assert invoke('fit', '-i', path, '--beta-scale', 2.5, '-o', out).exit_code == 0
        payload = _read_json(out)
        assert math.sqrt(payload['beta1'] * payload['beta2']) == pytest.approx(2.5)
        assert invoke('fit', '-i', path, '--beta-scale', 0).exit_code == 2

    def test_fit_help_explains_scale(self, runner):
        output = runner.invoke(cli, ['fit', '--help']).output
        assert '--beta-scale' in output
        assert 'beta2/beta1' in output


class TestSimulate:

    def test_requires_config_or_seed(self, invoke):
        assert invoke('simulate').exit_code == 2

    @pytest.mark.slow
    def test_deterministic_report(self, invoke, tmp_path):
        config = _write(tmp_path, 'plan.json', json.dumps({
            'true_params': '0.5,0.5,1,1,0.25', 'n': 30, 'replications': 2, 'methods': ['mle'], 'master_seed': 3}))
        first, second = tmp_path / 'a.csv', tmp_path / 'b.csv'
        for out in (first, second):
            assert invoke('simulate', '--config', config, '-o', out).exit_code == 0
        assert first.read_text() == second.read_text()
        table = pd.read_csv(first)
        assert list(table.columns) == ['method', 'param', 'n', 'rho', 'rb', 'rmse', 'n_converged', 'n_failed']
        assert len(table) == 5
