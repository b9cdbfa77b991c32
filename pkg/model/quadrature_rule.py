from dataclasses import dataclass
from enum import Enum
from infrastructure.base_model import BaseModel

import numpy as np

class QuadratureKind(str, Enum):
    GAUSS_HERMITE = 'gauss_hermite'
    GAUSS_LEGENDRE_ADAPTIVE = 'gauss_legendre_adaptive'


@dataclass(frozen=True, eq=False)
class QuadratureRule(BaseModel):
    """
    Regra de quadratura: abscissas estritamente crescentes e pesos positivos.

    Para `gauss_hermite` a regra integra f(x)·exp(-x²) (convenção dos físicos), de modo que a soma
    dos pesos é sqrt(pi). `gauss_legendre_adaptive` identifica a quadratura adaptativa, que não materializa uma regra fixa.

    Atributos:
        nodes (np.ndarray): Abscissas.
        weights (np.ndarray): Pesos correspondentes.
        kind (QuadratureKind): Família da regra.
    """
    nodes: np.ndarray
    weights: np.ndarray
    kind: QuadratureKind

    @property
    def order(self) -> int:
        return int(self.nodes.size)

    def integrate(self, values: np.ndarray) -> np.ndarray:
        """Soma ponderada ao longo do último eixo de `values` (avaliados nos nós)."""
        return np.asarray(values) @ self.weights
