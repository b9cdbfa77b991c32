from dataclasses import dataclass
from exception.error_invalid_parameter import ErrorInvalidParameter
from infrastructure.base_model import BaseModel
import math

def coerce_real(owner: object, name: str, value) -> float:
    """Converte `value` em float finito, grava-o no campo `name` de `owner` ou levanta ErrorInvalidParameter."""
    try:
        number = float(value)
    except (TypeError, ValueError) as e:
        raise ErrorInvalidParameter(f'{type(owner).__name__}.{name} deve ser numérico, recebido {value!r}.') from e
    if not math.isfinite(number):
        raise ErrorInvalidParameter(f'{type(owner).__name__}.{name} deve ser finito, recebido {value!r}.')
    object.__setattr__(owner, name, number)
    return number


@dataclass(frozen=True)
class BsParams(BaseModel):
    """
    Parâmetros de uma Birnbaum-Saunders marginal BS(alpha, beta).

    Atributos:
        alpha (float): Parâmetro de forma, positivo.
        beta (float): Parâmetro de escala (mediana), positivo.
    """
    alpha: float
    beta: float

    def __post_init__(self):
        for name in ('alpha', 'beta'):
            if coerce_real(self, name, getattr(self, name)) <= 0.0:
                raise ErrorInvalidParameter(f'BsParams.{name} deve ser positivo, recebido {getattr(self, name)!r}.')


@dataclass(frozen=True)
class BivBsParams(BaseModel):
    """
    Parâmetros da Birnbaum-Saunders bivariada: marginais de X e Y e a correlação rho na escala normal.

    Atributos:
        x (BsParams): Marginal de X.
        y (BsParams): Marginal de Y.
        rho (float): Correlação em (-1, 1).
    """
    x: BsParams
    y: BsParams
    rho: float

    def __post_init__(self):
        if not -1.0 < coerce_real(self, 'rho', self.rho) < 1.0:
            raise ErrorInvalidParameter(f'BivBsParams.rho deve estar em (-1, 1), recebido {self.rho!r}.')

    def swapped(self) -> 'BivBsParams':
        """Troca os papéis de X e Y."""
        return BivBsParams(x=self.y, y=self.x, rho=self.rho)
