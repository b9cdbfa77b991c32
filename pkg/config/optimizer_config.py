from dataclasses import dataclass
from exception.error_invalid_parameter import ErrorInvalidParameter
from typing import Tuple
import os

@dataclass(frozen=True)
class OptimizerConfig:
    """
    Configuração do ajuste por máxima verossimilhança e por máximo produto de espaçamentos.

    Atributos:
        n_starts (int): Número de pontos iniciais escolhidos na grade.
        alpha_grid (Tuple[float, ...]): Valores iniciais de alpha1 e alpha2.
        rho_grid (Tuple[float, ...]): Valores iniciais de rho.
        nelder_mead_maxiter (int): Iterações máximas do Nelder-Mead em cada início.
        quasi_newton_maxiter (int): Iterações máximas do BFGS de polimento.
        gradient_tolerance (float): Tolerância de ||grad||_inf na escala transformada.
        objective_tolerance (float): Variação relativa mínima do objetivo.
        n_jobs (int): Processos usados nos inícios múltiplos (joblib); 1 executa em série.
        tie_floor (float): Piso dos espaçamentos antes do logaritmo.
        alpha_bounds (Tuple[float, float]): Faixa de alpha explorada pelo otimizador.
        beta_scale (float): Média geométrica de (beta1, beta2) usada quando não há valor inicial.
        beta_newton_maxiter (int): Iterações máximas de Newton no ajuste Beta.
    """
    n_starts: int = 8
    alpha_grid: Tuple[float, ...] = (0.3, 0.8, 1.5)
    rho_grid: Tuple[float, ...] = (-0.5, 0.0, 0.5)
    nelder_mead_maxiter: int = 2000
    quasi_newton_maxiter: int = 500
    gradient_tolerance: float = 1e-6
    objective_tolerance: float = 1e-10
    n_jobs: int = 1
    tie_floor: float = 1e-300
    alpha_bounds: Tuple[float, float] = (1e-3, 1e3)
    beta_scale: float = 1.0
    beta_newton_maxiter: int = 100

    ENV_JOBS = 'UBBS1_JOBS'

    def __post_init__(self):
        if self.n_starts < 1:
            raise ErrorInvalidParameter(f'n_starts deve ser >= 1, recebido {self.n_starts}.')
        if not self.alpha_grid or not self.rho_grid:
            raise ErrorInvalidParameter('As grades de alpha e rho não podem ser vazias.')
        if any(a <= 0.0 for a in self.alpha_grid) or any(not -1.0 < r < 1.0 for r in self.rho_grid):
            raise ErrorInvalidParameter('Grade inicial fora do espaço paramétrico.')
        if not (self.gradient_tolerance > 0.0 and self.objective_tolerance > 0.0 and self.tie_floor > 0.0):
            raise ErrorInvalidParameter('As tolerâncias do otimizador devem ser positivas.')
        if not 0.0 < self.alpha_bounds[0] < self.alpha_bounds[1] or not self.beta_scale > 0.0:
            raise ErrorInvalidParameter('Limites de alpha ou escala de beta inválidos.')

    @classmethod
    def from_env(cls, **overrides) -> 'OptimizerConfig':
        """Configuração padrão com `n_jobs` lido de UBBS1_JOBS, se definido."""
        raw = os.environ.get(cls.ENV_JOBS)
        if raw and 'n_jobs' not in overrides:
            try:
                overrides['n_jobs'] = int(raw)
            except ValueError as e:
                raise ErrorInvalidParameter(f'{cls.ENV_JOBS} deve ser um inteiro, recebido "{raw}".') from e
        return cls(**overrides)
