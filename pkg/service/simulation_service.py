from config.optimizer_config import OptimizerConfig
from config.simulation_config import SimulationConfig
from exception.error_convergence import ErrorConvergence
from infrastructure.base_error import BaseError
from infrastructure.base_service import BaseService
from joblib import Parallel, delayed
from model.fit_result import FitMethod
from model.rng_state import RngState
from model.scenario import Scenario
from model.simulation_report import ParameterSummary, SimulationReport
from model.ubbs1_params import PARAM_NAMES
from service.estimation_service import EstimationService
from service.sampling_service import SamplingService
from typing import Dict, List, Optional, Sequence
import math

import numpy as np


class SimulationService(BaseService):
    """
    Estudo de Monte Carlo dos estimadores: para cada réplica gera uma amostra com o fluxo derivado
    de (master_seed, índice), ajusta com cada método e agrega RB e RMSE por parâmetro.

    Ajustes que falham são excluídos das médias e contados. As réplicas são independentes e podem
    ser executadas em paralelo sem alterar os agregados.
    """

    def __init__(self, optimizer_config: Optional[OptimizerConfig] = None, n_jobs: Optional[int] = None):
        super().__init__()
        self._sampling = SamplingService()
        self._estimation = EstimationService()
        # Os inícios múltiplos rodam em série dentro de cada réplica.
        self._optimizer_config = optimizer_config or OptimizerConfig(n_jobs=1)
        self._n_jobs = SimulationConfig.n_jobs() if n_jobs is None else int(n_jobs)

    def run_replication(self, scenario: Scenario, index: int) -> Dict[FitMethod, Optional[np.ndarray]]:
        """Executa a réplica `index`: estimativas por método, ou None quando o ajuste falha."""
        stream = RngState(scenario.master_seed).spawn(index)
        sample = self._sampling.sample_ubbs1(scenario.n, scenario.true_params, stream)
        estimates: Dict[FitMethod, Optional[np.ndarray]] = {}
        for method in scenario.methods:
            try:
                estimates[method] = self._estimation.fit(sample, method, config=self._optimizer_config).params.as_array()
            except BaseError as e:
                self._logger.warning(f'Réplica {index} ({method.value}, n={scenario.n}, rho={scenario.true_params.rho}) falhou: {e.message}')
                estimates[method] = None
        return estimates

    def run_scenario(self, scenario: Scenario) -> SimulationReport:
        """
        Executa todas as réplicas de um cenário e resume RB e RMSE por (método, parâmetro).

        Raises:
            ErrorConvergence: Se todas as réplicas falharem em todos os métodos.
        """
        self._logger.info(f'Cenário iniciado: theta=({scenario.true_params}), n={scenario.n}, réplicas={scenario.replications}')
        outcomes = Parallel(n_jobs=self._n_jobs)(
            delayed(self.run_replication)(scenario, index) for index in range(scenario.replications))

        truth = scenario.true_params.as_array()
        summaries: List[ParameterSummary] = []
        any_success = False
        for method in scenario.methods:
            converged = [o[method] for o in outcomes if o[method] is not None]
            any_success = any_success or bool(converged)
            estimates = np.array(converged).reshape(len(converged), len(PARAM_NAMES))
            rb, rmse = self.relative_bias_and_rmse(estimates, truth)
            n_failed = scenario.replications - len(converged)
            summaries.extend(ParameterSummary(method=method, param=name, rb=float(rb[k]), rmse=float(rmse[k]),
                                              n_converged=len(converged), n_failed=n_failed)
                             for k, name in enumerate(PARAM_NAMES))

        if not any_success:
            self._log_and_raise_warning(ErrorConvergence, f'Todas as réplicas falharam (n={scenario.n}, rho={scenario.true_params.rho}).',
                                        details={'n': scenario.n, 'rho': scenario.true_params.rho, 'replications': scenario.replications})
        self._logger.info(f'Cenário concluído: n={scenario.n}, rho={scenario.true_params.rho}')
        return SimulationReport(true_params=scenario.true_params, n=scenario.n, replications=scenario.replications, summaries=summaries)

    def run_grid(self, base: Scenario, n_values: Sequence[int], rho_values: Sequence[float]) -> List[SimulationReport]:
        """
        Produto cartesiano n x rho sobre o cenário-base; cada célula reutiliza a semente mestre.

        Returns:
            List[SimulationReport]: Um relatório por célula, na ordem (n, rho).
        """
        return [self.run_scenario(base.with_cell(n, rho)) for n in n_values for rho in rho_values]

    @staticmethod
    def relative_bias_and_rmse(estimates: np.ndarray, truth: np.ndarray):
        """
        RB = média de |(estimativa - verdade)/verdade| e RMSE = sqrt(média de (estimativa - verdade)²), por coluna.

        Sem estimativas, ambos são NaN; RB é NaN para parâmetros verdadeiros nulos.
        """
        estimates = np.asarray(estimates, dtype=float)
        truth = np.asarray(truth, dtype=float)
        if estimates.size == 0:
            return np.full(truth.shape, math.nan), np.full(truth.shape, math.nan)
        error = estimates - truth
        with np.errstate(divide='ignore', invalid='ignore'):
            rb = np.where(truth != 0.0, np.mean(np.abs(error / truth), axis=0), math.nan)
        rmse = np.sqrt(np.mean(error * error, axis=0))
        return rb, rmse
