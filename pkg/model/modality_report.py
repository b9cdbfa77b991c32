from dataclasses import dataclass, field
from enum import Enum
from infrastructure.base_model import BaseModel
from typing import List

class Modality(str, Enum):
    UNIMODAL = 'unimodal'
    BIMODAL = 'bimodal'


class CriticalKind(str, Enum):
    MAX = 'max'
    MIN = 'min'


@dataclass(frozen=True)
class CriticalPoint(BaseModel):
    z: float
    kind: CriticalKind


@dataclass(frozen=True)
class ModalityReport(BaseModel):
    """
    Resultado da classificação de modalidade da densidade.

    Atributos:
        kind (Modality): unimodal (1 máximo) ou bimodal (máximo, mínimo, máximo).
        critical_points (List[CriticalPoint]): Pontos críticos em ordem crescente de z.
    """
    kind: Modality
    critical_points: List[CriticalPoint] = field(default_factory=list)

    @property
    def modes(self) -> List[float]:
        return [point.z for point in self.critical_points if point.kind == CriticalKind.MAX]
