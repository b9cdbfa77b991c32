from dataclasses import dataclass, field
from exception.error_invalid_object import ErrorInvalidObject
from infrastructure.base_model import BaseModel
from typing import Sequence

import numpy as np

@dataclass(frozen=True, eq=False)
class UnitSample(BaseModel):
    """
    Amostra de observações estritamente em (0, 1), com a origem dos dados.

    Atributos:
        values (np.ndarray): Observações, na ordem original.
        source (str): Descrição livre da procedência (arquivo, semente, etc.).
    """
    values: np.ndarray
    source: str = ''
    _sorted: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        values = np.array(self.values, dtype=float).ravel()
        bad = ~np.isfinite(values) | (values <= 0.0) | (values >= 1.0)
        if np.any(bad):
            rows = np.flatnonzero(bad)[:10].tolist()
            raise ErrorInvalidObject(f'A amostra deve conter apenas valores finitos em (0, 1); {int(bad.sum())} valor(es) inválido(s).',
                                     details={'rows': rows})
        values.setflags(write=False)
        sorted_values = np.sort(values)
        sorted_values.setflags(write=False)
        object.__setattr__(self, 'values', values)
        object.__setattr__(self, '_sorted', sorted_values)

    @classmethod
    def of(cls, values: Sequence[float], source: str = '') -> 'UnitSample':
        return cls(values=np.asarray(values, dtype=float), source=source)

    @property
    def n(self) -> int:
        return int(self.values.size)

    @property
    def sorted_values(self) -> np.ndarray:
        """Cópia ordenada (somente leitura), usada pelas estatísticas de ordem."""
        return self._sorted

    def reflected(self) -> 'UnitSample':
        """Amostra {1 - z_i}."""
        return UnitSample(values=1.0 - self.values, source=f'{self.source} (refletida)' if self.source else 'refletida')

    def to_dict(self, visited=None, max_depth: int = 5, current_depth: int = 0):
        payload = super().to_dict(visited, max_depth, current_depth)
        if payload is not None:
            payload['n'] = self.n
        return payload
