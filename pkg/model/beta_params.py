from dataclasses import dataclass
from exception.error_invalid_parameter import ErrorInvalidParameter
from infrastructure.base_model import BaseModel
from model.bs_params import coerce_real

@dataclass(frozen=True)
class BetaParams(BaseModel):
    """Parâmetros de forma (a, b) da distribuição Beta usada como modelo de referência."""
    a: float
    b: float

    def __post_init__(self):
        for name in ('a', 'b'):
            if coerce_real(self, name, getattr(self, name)) <= 0.0:
                raise ErrorInvalidParameter(f'BetaParams.{name} deve ser positivo, recebido {getattr(self, name)!r}.')

    def __str__(self) -> str:
        return f'{self.a:.6g},{self.b:.6g}'
