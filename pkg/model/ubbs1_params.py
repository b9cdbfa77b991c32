from dataclasses import dataclass
from exception.error_invalid_parameter import ErrorInvalidParameter
from infrastructure.base_model import BaseModel
from model.bs_params import BivBsParams, BsParams, coerce_real
from typing import Sequence, Tuple

import numpy as np

PARAM_NAMES: Tuple[str, ...] = ('alpha1', 'alpha2', 'beta1', 'beta2', 'rho')


@dataclass(frozen=True)
class Ubbs1Params(BaseModel):
    """
    Vetor de parâmetros theta_rho = (alpha1, alpha2, beta1, beta2, rho) da distribuição UBBS1.

    (alpha1, beta1) são os parâmetros de X e (alpha2, beta2) os de Y na razão Z = Y/(X+Y);
    rho é a correlação de (X, Y) na escala normal.

    Atributos:
        alpha1, alpha2 (float): Parâmetros de forma, positivos.
        beta1, beta2 (float): Parâmetros de escala, positivos.
        rho (float): Correlação em (-1, 1).
    """
    alpha1: float
    alpha2: float
    beta1: float
    beta2: float
    rho: float

    def __post_init__(self):
        for name in PARAM_NAMES[:4]:
            if coerce_real(self, name, getattr(self, name)) <= 0.0:
                raise ErrorInvalidParameter(f'Ubbs1Params.{name} deve ser positivo, recebido {getattr(self, name)!r}.')
        if not -1.0 < coerce_real(self, 'rho', self.rho) < 1.0:
            raise ErrorInvalidParameter(f'Ubbs1Params.rho deve estar em (-1, 1), recebido {self.rho!r}.')

    @classmethod
    def from_sequence(cls, values: Sequence[float]) -> 'Ubbs1Params':
        """Constrói os parâmetros a partir de uma sequência na ordem (alpha1, alpha2, beta1, beta2, rho)."""
        values = list(values)
        if len(values) != len(PARAM_NAMES):
            raise ErrorInvalidParameter(f'São esperados 5 parâmetros (alpha1, alpha2, beta1, beta2, rho), recebidos {len(values)}.')
        return cls(*values)

    @classmethod
    def from_string(cls, text: str) -> 'Ubbs1Params':
        """
        Lê a quíntupla separada por vírgulas usada na linha de comando, por exemplo "0.5,0.5,1,1,0".

        Raises:
            ErrorInvalidParameter: Se o texto não tiver 5 números válidos.
        """
        try:
            values = [float(item) for item in str(text).split(',')]
        except ValueError as e:
            raise ErrorInvalidParameter(f'Parâmetros inválidos "{text}"; use alpha1,alpha2,beta1,beta2,rho.') from e
        return cls.from_sequence(values)

    def as_tuple(self) -> Tuple[float, float, float, float, float]:
        return (self.alpha1, self.alpha2, self.beta1, self.beta2, self.rho)

    def as_array(self) -> np.ndarray:
        return np.array(self.as_tuple(), dtype=float)

    @property
    def x_params(self) -> BsParams:
        return BsParams(self.alpha1, self.beta1)

    @property
    def y_params(self) -> BsParams:
        return BsParams(self.alpha2, self.beta2)

    def bivariate(self) -> BivBsParams:
        """Parâmetros da Birnbaum-Saunders bivariada de (X, Y)."""
        return BivBsParams(x=self.x_params, y=self.y_params, rho=self.rho)

    def reflected(self) -> 'Ubbs1Params':
        """Parâmetros da variável 1 - Z = X/(X+Y): troca (alpha1, beta1) com (alpha2, beta2)."""
        return Ubbs1Params(self.alpha2, self.alpha1, self.beta2, self.beta1, self.rho)

    def replace(self, **changes) -> 'Ubbs1Params':
        values = dict(zip(PARAM_NAMES, self.as_tuple()))
        values.update(changes)
        return Ubbs1Params(**values)

    def __str__(self) -> str:
        return ','.join(f'{value:.6g}' for value in self.as_tuple())
