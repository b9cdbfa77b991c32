from config.optimizer_config import OptimizerConfig
from dataclasses import replace
from exception.error_convergence import ErrorConvergence
from exception.error_insufficient_data import ErrorInsufficientData
from exception.error_invalid_object import ErrorInvalidObject
from infrastructure.base_service import BaseService
from model.descriptive_statistics import DescriptiveStatistics
from model.fit_result import FitMethod, FitResult, information_criteria
from model.model_comparison import ComparisonRow, ModelComparison
from model.ubbs1_params import Ubbs1Params
from model.unit_sample import UnitSample
from scipy import stats
from service.estimation_service import EstimationService
from service.ubbs1_service import Ubbs1Service
from typing import Optional, Sequence
import math

import numpy as np

MODEL_NAMES = ('ubbs1_mle', 'ubbs1_mps', 'beta')


class ModelSelectionService(BaseService):
    """
    Descrição de dados e seleção de modelos: estatísticas descritivas, comparação por AIC/BIC entre
    UBBS1 (mle, mps) e Beta e a distância de Kolmogorov-Smirnov entre a ECDF e a CDF ajustada.
    """

    def __init__(self):
        super().__init__()
        self._estimation = EstimationService()
        self._ubbs1 = Ubbs1Service()

    def describe(self, sample: UnitSample) -> DescriptiveStatistics:
        """
        Mínimo, quartis (interpolação linear), média, máximo, desvio padrão (ddof = 1), assimetria e
        curtose em excesso, ambas com correção de viés.

        Raises:
            ErrorInsufficientData: Se n < 2.
        """
        if sample.n < 2:
            raise ErrorInsufficientData(f'A descrição exige n >= 2, recebido {sample.n}.', details={'n': sample.n})
        z = sample.values
        q1, median, q3 = np.quantile(z, [0.25, 0.5, 0.75])
        return DescriptiveStatistics(
            n=sample.n,
            minimum=float(z.min()),
            first_quartile=float(q1),
            median=float(median),
            mean=float(z.mean()),
            third_quartile=float(q3),
            maximum=float(z.max()),
            std_dev=float(z.std(ddof=1)),
            skewness=float(stats.skew(z, bias=False)),
            kurtosis=float(stats.kurtosis(z, fisher=True, bias=False)),
        )

    def compare(self, sample: UnitSample, models: Sequence[str] = MODEL_NAMES, config: Optional[OptimizerConfig] = None) -> ModelComparison:
        """
        Ajusta cada modelo e ordena por AIC; o de menor AIC é marcado.

        Raises:
            ErrorInvalidObject: Se a lista estiver vazia ou contiver modelos desconhecidos.
        """
        models = list(dict.fromkeys(models))
        unknown = [name for name in models if name not in MODEL_NAMES]
        if not models or unknown:
            raise ErrorInvalidObject(f'Modelos inválidos: {unknown or "lista vazia"}; use {", ".join(MODEL_NAMES)}.')

        rows = []
        for name in models:
            fit = self._fit_model(name, sample, config)
            loglik = self._full_loglik(sample, fit)
            aic, bic = information_criteria(loglik, fit.k, fit.n)
            rows.append(ComparisonRow(model=name, loglik=loglik, aic=aic, bic=bic, params=str(fit.params), fit=fit))
        rows.sort(key=lambda row: row.aic)
        rows[0] = replace(rows[0], best_aic=True)
        self._logger.info(f'Comparação concluída; melhor modelo por AIC: {rows[0].model}')
        return ModelComparison(rows=rows)

    def _full_loglik(self, sample: UnitSample, fit: FitResult) -> float:
        # O l da UBBS1 omite sum log[(s_i+1)²/s_i]; a comparação com a Beta usa a log-densidade completa.
        if fit.method == FitMethod.BETA:
            return fit.loglik
        return math.fsum(np.asarray(self._ubbs1.log_pdf(sample.values, fit.params)))

    def _fit_model(self, name: str, sample: UnitSample, config: Optional[OptimizerConfig]) -> FitResult:
        if name == 'beta':
            return self._estimation.fit_beta_baseline(sample)
        method = FitMethod.MLE if name == 'ubbs1_mle' else FitMethod.MPS
        try:
            return self._estimation.fit(sample, method, config=config)
        except ErrorConvergence as e:
            if isinstance(e.best_estimate, FitResult):
                self._logger.warning(f'{name}: usando a melhor estimativa não convergida na comparação.')
                return e.best_estimate
            raise

    def empirical_ks(self, sample: UnitSample, params: Ubbs1Params) -> float:
        """Distância de Kolmogorov-Smirnov entre a ECDF da amostra e a CDF UBBS1, nas estatísticas de ordem."""
        cdf = np.asarray(self._ubbs1.cdf(sample.sorted_values, params))
        n = sample.n
        upper = np.arange(1, n + 1) / n - cdf
        lower = cdf - np.arange(0, n) / n
        return float(max(upper.max(), lower.max()))
