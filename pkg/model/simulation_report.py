from dataclasses import dataclass, field
from infrastructure.base_model import BaseModel
from model.fit_result import FitMethod
from model.ubbs1_params import Ubbs1Params
from typing import Any, Dict, List

REPORT_COLUMNS = ('method', 'param', 'n', 'rho', 'rb', 'rmse', 'n_converged', 'n_failed')


@dataclass(frozen=True)
class ParameterSummary(BaseModel):
    """
    RB e RMSE de um parâmetro para um método.

    rb = média de |(estimativa - verdade)/verdade| e rmse = sqrt(média de (estimativa - verdade)²),
    ambos sobre as réplicas convergidas (NaN quando nenhuma convergiu).
    """
    method: FitMethod
    param: str
    rb: float
    rmse: float
    n_converged: int
    n_failed: int


@dataclass(frozen=True)
class SimulationReport(BaseModel):
    """Resultado de um cenário: resumos por (método, parâmetro), identificado por (n, rho)."""
    true_params: Ubbs1Params
    n: int
    replications: int
    summaries: List[ParameterSummary] = field(default_factory=list)

    @property
    def rho(self) -> float:
        return self.true_params.rho

    def summary(self, method: FitMethod, param: str) -> ParameterSummary:
        for item in self.summaries:
            if item.method == FitMethod(method) and item.param == param:
                return item
        raise KeyError((method, param))

    def rows(self) -> List[Dict[str, Any]]:
        """Linhas do CSV organizado: method, param, n, rho, rb, rmse, n_converged, n_failed."""
        return [{'method': item.method.value, 'param': item.param, 'n': self.n, 'rho': self.rho, 'rb': item.rb,
                 'rmse': item.rmse, 'n_converged': item.n_converged, 'n_failed': item.n_failed} for item in self.summaries]
