from dataclasses import dataclass, field
from infrastructure.base_model import BaseModel
from model.fit_result import FitResult
from typing import List, Optional

COMPARISON_COLUMNS = ('model', 'loglik', 'aic', 'bic', 'best_aic')


@dataclass(frozen=True)
class ComparisonRow(BaseModel):
    model: str
    loglik: float
    aic: float
    bic: float
    params: str
    best_aic: bool = False
    fit: Optional[FitResult] = field(default=None, repr=False)


@dataclass(frozen=True)
class ModelComparison(BaseModel):
    """Linhas ordenadas por AIC crescente; a primeira é marcada como a melhor."""
    rows: List[ComparisonRow] = field(default_factory=list)

    @property
    def best(self) -> Optional[ComparisonRow]:
        return next((row for row in self.rows if row.best_aic), None)

    def table(self):
        """Linhas `model,loglik,aic,bic,best_aic,params`; o CSV usa apenas as cinco primeiras colunas."""
        return [{'model': row.model, 'loglik': row.loglik, 'aic': row.aic, 'bic': row.bic, 'best_aic': row.best_aic,
                 'params': row.params}
                for row in self.rows]
