from config.logging_config import ConsoleLoggingConfig, FileLoggingConfig
from config.numerics_config import QuadratureConfig
from config.optimizer_config import OptimizerConfig
from exception.error_domain import ErrorDomain
from exception.error_invalid_object import ErrorInvalidObject
from exception.error_invalid_parameter import ErrorInvalidParameter
from exception.error_unsupported_parameter import ErrorUnsupportedParameter
from infrastructure.base_error import BaseError
from model.fit_result import FitMethod
from model.grid_spec import GridSpec
from model.ratio_convention import RatioConvention
from model.ubbs1_params import Ubbs1Params
from repository.report_repository import ReportRepository
from repository.sample_repository import SampleRepository
from repository.scenario_repository import ScenarioRepository
from service.estimation_service import EstimationService
from service.model_selection_service import MODEL_NAMES, ModelSelectionService
from service.sampling_service import SamplingService
from service.simulation_service import SimulationService
from service.ubbs1_service import Ubbs1Service
import dataclasses
import logging
import os

import click

USAGE_ERRORS = (ErrorDomain, ErrorInvalidParameter, ErrorUnsupportedParameter, ErrorInvalidObject)


class ParamsType(click.ParamType):
    """Quíntupla `alpha1,alpha2,beta1,beta2,rho`."""
    name = 'params'

    def convert(self, value, param, ctx):
        if isinstance(value, Ubbs1Params):
            return value
        try:
            return Ubbs1Params.from_string(value)
        except BaseError as e:
            self.fail(e.message, param, ctx)


class GridType(click.ParamType):
    """Grade `start:stop:count` em (0, 1)."""
    name = 'grid'

    def convert(self, value, param, ctx):
        if isinstance(value, GridSpec):
            return value
        try:
            return GridSpec.parse(value)
        except BaseError as e:
            self.fail(e.message, param, ctx)


class IntListType(click.ParamType):
    name = 'list'

    def convert(self, value, param, ctx):
        if isinstance(value, (list, tuple)):
            return list(value)
        try:
            return [int(item) for item in str(value).split(',')]
        except ValueError:
            self.fail(f'"{value}" não é uma lista de inteiros separados por vírgula.', param, ctx)


PARAMS = ParamsType()
GRID = GridType()
INT_LIST = IntListType()


class Ubbs1Group(click.Group):
    """
    Grupo de comandos que traduz as exceções do domínio para os códigos de saída:
    erros de uso (argumentos e dados malformados) saem com 2, os demais com 1.
    """

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except USAGE_ERRORS as e:
            raise click.UsageError(e.message) from e
        except BaseError as e:
            raise click.ClickException(e.message) from e


def params_option(required: bool = True, name: str = '--params', help_text: str = 'Parâmetros alpha1,alpha2,beta1,beta2,rho.'):
    return click.option(name, type=PARAMS, required=required, help=help_text)


output_option = click.option('--output', '-o', default='-', show_default=True, type=click.Path(dir_okay=False, allow_dash=True),
                             help='Arquivo de saída; "-" para stdout.')
input_option = click.option('--input', '-i', 'input_path', required=True, type=click.Path(exists=True, dir_okay=False),
                            help='CSV de uma coluna (cabeçalho `z` ou sem cabeçalho).')
format_option = click.option('--format', 'output_format', type=click.Choice(['csv', 'json']), default='csv', show_default=True)
seed_option = click.option('--seed', type=click.IntRange(min=0), required=True, help='Semente explícita (obrigatória).')


def _write_rows(rows, columns, output, output_format):
    with click.open_file(output, 'w') as target:
        if output_format == 'json':
            ReportRepository().write_document(rows, target)
        else:
            ReportRepository().write_table(rows, columns, target)


def _write_document(payload, output):
    with click.open_file(output, 'w') as target:
        ReportRepository().write_document(payload, target)


def _load_sample(input_path, column):
    load = SampleRepository().load(input_path, column=column)
    if load.rejected_rows:
        click.echo(f'{len(load.rejected_rows)} linha(s) fora de (0, 1) descartada(s).', err=True)
    return load


@click.group(cls=Ubbs1Group)
@click.option('--verbose', '-v', is_flag=True, help='Logging em nível DEBUG.')
@click.option('--log-file', type=click.Path(dir_okay=False), default=None, help='Também registra o log neste arquivo.')
@click.option('--order', type=click.IntRange(QuadratureConfig.MIN_ORDER, QuadratureConfig.MAX_ORDER), default=None,
              help=f'Ordem de Gauss-Hermite (sobrepõe {QuadratureConfig.ENV_ORDER}).')
@click.pass_context
def cli(ctx, verbose, log_file, order):
    """Distribuição UBBS1: densidade, CDF, momentos, amostragem, ajuste e simulação."""
    ConsoleLoggingConfig.setup_console_logging(logging.DEBUG if verbose else logging.INFO)
    if log_file:
        FileLoggingConfig.setup_file_logging(log_file)
    if order is not None:
        previous = os.environ.get(QuadratureConfig.ENV_ORDER)
        os.environ[QuadratureConfig.ENV_ORDER] = str(order)
        ctx.call_on_close(lambda: _restore_env(QuadratureConfig.ENV_ORDER, previous))


def _restore_env(name, previous):
    if previous is None:
        os.environ.pop(name, None)
    else:
        os.environ[name] = previous


def _tabulate(function, params, grid, output, output_format):
    points = grid.points()
    values = function(points, params)
    rows = [{'z': float(z), 'value': float(v)} for z, v in zip(points, values)]
    _write_rows(rows, ('z', 'value'), output, output_format)


@cli.command()
@params_option()
@click.option('--grid', type=GRID, required=True, help='Grade start:stop:count com 0 < start < stop < 1.')
@output_option
@format_option
def pdf(params, grid, output, output_format):
    """Tabula a densidade f_Z em uma grade."""
    _tabulate(Ubbs1Service().pdf, params, grid, output, output_format)


@cli.command()
@params_option()
@click.option('--grid', type=GRID, required=True, help='Grade start:stop:count com 0 < start < stop < 1.')
@output_option
@format_option
def cdf(params, grid, output, output_format):
    """Tabula a CDF F_Z em uma grade."""
    _tabulate(Ubbs1Service().cdf, params, grid, output, output_format)


@cli.command()
@params_option()
@click.option('--grid', type=GRID, required=True, help='Grade de probabilidades start:stop:count.')
@output_option
@format_option
def quantile(params, grid, output, output_format):
    """Tabula a função quantil; a coluna `z` contém as probabilidades."""
    service = Ubbs1Service()
    _tabulate(lambda points, p: [service.quantile(q, p) for q in points], params, grid, output, output_format)


@cli.command()
@params_option()
@click.option('--orders', type=INT_LIST, default='1,2,3,4', show_default=True, help='Ordens dos momentos.')
@output_option
@format_option
def moments(params, orders, output, output_format):
    """Momentos E[Z^n]."""
    values = Ubbs1Service().moments(orders, params)
    rows = [{'n': n, 'value': value} for n, value in zip(orders, values)]
    _write_rows(rows, ('n', 'value'), output, output_format)


@cli.command()
@params_option()
@click.option('--route', type=click.Choice(['integral', 'cdf']), default='integral', show_default=True)
@output_option
def stress(params, route, output):
    """Probabilidade de estresse-resistência R = P(X < Y)."""
    value = Ubbs1Service().stress_strength(params, route=route)
    _write_document({'params': params.to_dict(), 'route': route, 'stress_strength': value}, output)


@cli.command()
@params_option()
@output_option
def modality(params, output):
    """Classifica a densidade como unimodal ou bimodal e lista os pontos críticos."""
    report = Ubbs1Service().classify_modality(params)
    _write_document(report.to_dict(), output)


@cli.command()
@params_option()
@click.option('--n', 'size', type=click.IntRange(min=1), required=True, help='Tamanho da amostra.')
@seed_option
@click.option('--convention', type=click.Choice([c.value for c in RatioConvention]), default=RatioConvention.DENSITY.value,
              show_default=True, help='density: Z = T2/(T1+T2); algorithm: T1/(T1+T2).')
@click.option('--format', 'output_format', type=click.Choice(['csv', 'text']), default='csv', show_default=True,
              help='csv com cabeçalho `z` ou um valor por linha.')
@output_option
def sample(params, size, seed, convention, output_format, output):
    """Gera uma amostra UBBS1."""
    service = SamplingService()
    drawn = service.sample_ubbs1(size, params, service.rng(seed), RatioConvention(convention))
    with click.open_file(output, 'w') as target:
        SampleRepository().save(drawn, target, header=output_format == 'csv')


@cli.command()
@input_option
@click.option('--column', default='z', show_default=True, help='Coluna lida quando o CSV tem várias.')
@click.option('--method', type=click.Choice([FitMethod.MLE.value, FitMethod.MPS.value]), default=FitMethod.MLE.value, show_default=True)
@params_option(required=False, name='--init', help_text='Ponto inicial opcional alpha1,alpha2,beta1,beta2,rho.')
@click.option('--beta-scale', type=click.FloatRange(min=0.0, min_open=True), default=None,
              help='Média geométrica sqrt(beta1·beta2) assumida no ajuste (padrão 1). Ignorada com --init.')
@click.option('--jobs', type=int, default=None, help='Processos para os inícios múltiplos.')
@output_option
def fit(input_path, column, method, init, beta_scale, jobs, output):
    """
    Ajusta a UBBS1 por máxima verossimilhança ou por produto de espaçamentos.

    A amostra só identifica a razão beta2/beta1. Para recuperar beta1 e beta2 informe a escala
    sqrt(beta1·beta2) com --beta-scale ou um ponto inicial com --init; sem isso a escala é 1.
    """
    load = _load_sample(input_path, column)
    overrides = {key: value for key, value in (('n_jobs', jobs), ('beta_scale', beta_scale)) if value is not None}
    config = OptimizerConfig.from_env(**overrides)
    result = EstimationService().fit(load.sample, FitMethod(method), init=init, config=config)
    payload = result.to_flat_dict()
    payload['rejected_rows'] = len(load.rejected_rows)
    _write_document(payload, output)


@cli.command()
@input_option
@click.option('--column', default='z', show_default=True)
@click.option('--models', default=','.join(MODEL_NAMES), show_default=True, help='Modelos separados por vírgula.')
@output_option
@format_option
def compare(input_path, column, models, output, output_format):
    """Compara modelos por AIC e BIC; a linha de menor AIC é marcada."""
    names = [name.strip() for name in models.split(',') if name.strip()]
    comparison = ModelSelectionService().compare(_load_sample(input_path, column).sample, names)
    with click.open_file(output, 'w') as target:
        if output_format == 'json':
            ReportRepository().write_document(comparison.table(), target)
        else:
            ReportRepository().write_comparison(comparison, target)


@cli.command()
@input_option
@click.option('--column', default='z', show_default=True)
@output_option
def describe(input_path, column, output):
    """Estatísticas descritivas da amostra."""
    statistics = ModelSelectionService().describe(_load_sample(input_path, column).sample)
    _write_document(statistics.to_dict(), output)


@cli.command()
@click.option('--input', '-i', 'input_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='CSV com cabeçalho contendo as duas colunas.')
@click.option('--x-column', default='x', show_default=True, help='Numerador de u = x/(x+y).')
@click.option('--y-column', default='y', show_default=True)
@output_option
def prepare(input_path, x_column, y_column, output):
    """Constrói a amostra u = x/(x+y) de um CSV de duas colunas, removendo linhas inválidas."""
    load = SampleRepository().prepare_ratio(input_path, x_column=x_column, y_column=y_column)
    if load.rejected_rows:
        click.echo(f'{len(load.rejected_rows)} linha(s) removida(s).', err=True)
    with click.open_file(output, 'w') as target:
        SampleRepository().save(load.sample, target)


@cli.command()
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False), default=None,
              help='Configuração JSON do estudo; sem ela, usa a grade padrão.')
@click.option('--seed', type=click.IntRange(min=0), default=None, help='Semente mestre; obrigatória sem --config.')
@click.option('--replications', type=click.IntRange(min=1), default=None, help='Sobrepõe o número de réplicas.')
@click.option('--jobs', type=int, default=None, help='Processos para as réplicas (padrão: UBBS1_JOBS).')
@output_option
@format_option
def simulate(config_path, seed, replications, jobs, output, output_format):
    """Estudo de Monte Carlo: RB e RMSE por método, parâmetro, n e rho."""
    repository = ScenarioRepository()
    if config_path is not None:
        plan = repository.load(config_path)
    elif seed is not None:
        plan = repository.default_grid(seed)
    else:
        raise click.UsageError('Informe --config ou --seed.')
    base = plan.base
    if seed is not None or replications is not None:
        base = dataclasses.replace(base, master_seed=base.master_seed if seed is None else seed,
                                   replications=base.replications if replications is None else replications)
    reports = SimulationService(n_jobs=jobs).run_grid(base, plan.n_values, plan.rho_values)
    with click.open_file(output, 'w') as target:
        if output_format == 'json':
            ReportRepository().write_document([report.to_dict() for report in reports], target)
        else:
            ReportRepository().write_simulation(reports, target)


if __name__ == '__main__':
    cli()
