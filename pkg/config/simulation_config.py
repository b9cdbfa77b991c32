from exception.error_invalid_parameter import ErrorInvalidParameter
from typing import Tuple
import os

class SimulationConfig:
    """
    Valores padrão do estudo de Monte Carlo.

    Atributos da Classe:
        REPLICATIONS (int): Réplicas por cenário.
        N_VALUES (Tuple[int, ...]): Tamanhos de amostra da grade.
        RHO_VALUES (Tuple[float, ...]): Correlações da grade.
        BASE_TRUTH (Tuple[float, float, float, float]): (alpha1, alpha2, beta1, beta2) verdadeiros da grade.
        METHODS (Tuple[str, ...]): Métodos comparados.
        ENV_JOBS (str): Variável de ambiente com o número de processos das réplicas.
    """
    REPLICATIONS: int = 300
    N_VALUES: Tuple[int, ...] = (100, 200, 400, 800)
    RHO_VALUES: Tuple[float, ...] = (0.10, 0.25, 0.5, 0.75)
    BASE_TRUTH: Tuple[float, float, float, float] = (0.5, 0.5, 1.0, 1.0)
    METHODS: Tuple[str, ...] = ('mle', 'mps')
    ENV_JOBS: str = 'UBBS1_JOBS'

    @classmethod
    def n_jobs(cls) -> int:
        """Número de processos das réplicas (UBBS1_JOBS, padrão 1)."""
        raw = os.environ.get(cls.ENV_JOBS)
        if raw is None or raw.strip() == '':
            return 1
        try:
            return int(raw)
        except ValueError as e:
            raise ErrorInvalidParameter(f'{cls.ENV_JOBS} deve ser um inteiro, recebido "{raw}".') from e
