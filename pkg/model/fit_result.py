from dataclasses import dataclass, field
from enum import Enum
from infrastructure.base_model import BaseModel
from model.beta_params import BetaParams
from model.ubbs1_params import Ubbs1Params
from typing import Any, Dict, Optional, Union
import math

class FitMethod(str, Enum):
    MLE = 'mle'
    MPS = 'mps'
    BETA = 'beta'


def information_criteria(loglik: float, k: int, n: int):
    """(AIC, BIC) = (-2·loglik + 2k, -2·loglik + k·log n)."""
    return -2.0 * loglik + 2.0 * k, -2.0 * loglik + k * math.log(n)


@dataclass(frozen=True)
class FitResult(BaseModel):
    """
    Resultado de um ajuste.

    `loglik` é sempre a log-verossimilhança nos parâmetros retornados, inclusive para MPS, e AIC/BIC
    derivam dela com k parâmetros (5 para UBBS1, 2 para a Beta).

    Atributos:
        params (Ubbs1Params | BetaParams): Estimativas.
        method (FitMethod): mle, mps ou beta.
        objective (float): Valor do objetivo no ótimo (l para mle e beta, H para mps).
        loglik (float): Log-verossimilhança nas estimativas.
        aic, bic (float): Critérios de informação.
        converged (bool): Se o critério de convergência foi atingido.
        iterations (int): Iterações do melhor início.
        gradient_norm (Optional[float]): ||grad||_inf da log-verossimilhança média na escala transformada (mle) ou do escore (beta).
        n (int): Tamanho da amostra.
        k (int): Número de parâmetros.
        diagnostics (Dict[str, Any]): Informações adicionais (inícios, empates, mensagem do otimizador).
    """
    params: Union[Ubbs1Params, BetaParams]
    method: FitMethod
    objective: float
    loglik: float
    aic: float
    bic: float
    converged: bool
    iterations: int
    gradient_norm: Optional[float]
    n: int
    k: int
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def build(cls, params, method: FitMethod, objective: float, loglik: float, n: int, k: int, converged: bool,
              iterations: int, gradient_norm: Optional[float] = None, diagnostics: Optional[Dict[str, Any]] = None) -> 'FitResult':
        aic, bic = information_criteria(loglik, k, n)
        return cls(params=params, method=method, objective=float(objective), loglik=float(loglik), aic=aic, bic=bic,
                   converged=bool(converged), iterations=int(iterations),
                   gradient_norm=None if gradient_norm is None else float(gradient_norm), n=int(n), k=int(k),
                   diagnostics=dict(diagnostics or {}))

    def to_flat_dict(self) -> Dict[str, Any]:
        """Objeto JSON plano: parâmetros no primeiro nível, seguidos de método, loglik, AIC/BIC e diagnósticos."""
        payload = dict(self.params.to_dict())
        summary = self.to_dict()
        summary.pop('params', None)
        payload.update(summary)
        return payload
