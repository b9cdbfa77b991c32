from dataclasses import dataclass
from infrastructure.base_model import BaseModel

@dataclass(frozen=True)
class DescriptiveStatistics(BaseModel):
    """
    Resumo descritivo de uma amostra.

    Atributos:
        n (int): Tamanho da amostra.
        minimum, first_quartile, median, mean, third_quartile, maximum (float): Posição.
        std_dev (float): Desvio padrão amostral (ddof = 1).
        skewness (float): Assimetria amostral com correção de viés.
        kurtosis (float): Curtose em excesso com correção de viés.
    """
    n: int
    minimum: float
    first_quartile: float
    median: float
    mean: float
    third_quartile: float
    maximum: float
    std_dev: float
    skewness: float
    kurtosis: float
