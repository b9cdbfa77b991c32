from config.numerics_config import QuadratureConfig
from exception.error_convergence import ErrorConvergence
from exception.error_domain import ErrorDomain
from exception.error_execution import ErrorExecution
from functools import lru_cache
from infrastructure.base_service import BaseService
from model.quadrature_rule import QuadratureKind, QuadratureRule
from numpy.polynomial.hermite import hermgauss
from scipy import integrate, special
from typing import Callable, Tuple, Union
import math

import numpy as np

ArrayLike = Union[float, np.ndarray]

# Códigos de `info.status` de quad_vec.
_QUAD_NOT_CONVERGED = 1
_QUAD_ROUNDING = 2
_QUAD_NOT_A_NUMBER = 3


@lru_cache(maxsize=32)
def _hermite_rule(order: int) -> QuadratureRule:
    nodes, weights = hermgauss(order)
    # Pesos das caudas de ordens altas sofrem underflow; não contribuem para a soma.
    keep = weights > 0.0
    return QuadratureRule(nodes=nodes[keep], weights=weights[keep], kind=QuadratureKind.GAUSS_HERMITE)


class SpecfunService(BaseService):
    """
    Funções especiais e quadraturas usadas pela distribuição UBBS1.

    Reúne as funções de Bessel modificadas K0/K1 em forma escalada, a função erro, a densidade e a
    CDF normais padrão, as regras de Gauss-Hermite e a quadratura adaptativa (via scipy).
    Todas as operações são puras e podem ser usadas concorrentemente.
    """

    def bessel_k_scaled(self, order: int, x: ArrayLike) -> ArrayLike:
        """
        Calcula exp(x)·K_order(x) para order em {0, 1}.

        O fator exp(x) permite que a densidade seja avaliada em escala logarítmica sem overflow:
        log K(x) = log(bessel_k_scaled(x)) - x. A simetria K_{-1} = K_1 fica a cargo de quem chama.

        Args:
            order (int): Ordem da função (0 ou 1).
            x (float | np.ndarray): Argumento(s) positivo(s) e finito(s).

        Returns:
            float | np.ndarray: Valor(es) escalado(s), com a mesma forma de `x`.

        Raises:
            ErrorDomain: Se a ordem não for 0 ou 1, ou se algum x for não positivo ou não finito.
        """
        if order not in (0, 1):
            raise ErrorDomain(f'Ordem de Bessel {order} não suportada; use 0 ou 1.')
        values = np.asarray(x, dtype=float)
        if not np.all(np.isfinite(values)) or np.any(values <= 0.0):
            raise ErrorDomain('A função de Bessel K exige x > 0 finito.', details={'order': order})
        result = special.k0e(values) if order == 0 else special.k1e(values)
        return float(result) if np.ndim(x) == 0 else result

    def log_bessel_k(self, order: int, x: ArrayLike) -> ArrayLike:
        """log K_order(x), calculado a partir da forma escalada."""
        return np.log(self.bessel_k_scaled(order, x)) - np.asarray(x, dtype=float)

    def erf(self, x: ArrayLike) -> ArrayLike:
        """
        Função erro, ímpar e limitada a [-1, 1].

        Raises:
            ErrorDomain: Para entradas não finitas.
        """
        values = np.asarray(x, dtype=float)
        if not np.all(np.isfinite(values)):
            raise ErrorDomain('erf exige argumento finito.')
        result = special.erf(values)
        return float(result) if np.ndim(x) == 0 else result

    def std_normal_pdf(self, x: ArrayLike) -> ArrayLike:
        """Densidade normal padrão exp(-x²/2)/sqrt(2·pi)."""
        values = np.asarray(x, dtype=float)
        if not np.all(np.isfinite(values)):
            raise ErrorDomain('A densidade normal exige argumento finito.')
        result = np.exp(-0.5 * values * values) / math.sqrt(2.0 * math.pi)
        return float(result) if np.ndim(x) == 0 else result

    def std_normal_cdf(self, x: ArrayLike) -> ArrayLike:
        """CDF normal padrão, Phi(x) = (1 + erf(x/sqrt(2)))/2, avaliada por `ndtr` (sem cancelamento na cauda)."""
        values = np.asarray(x, dtype=float)
        if not np.all(np.isfinite(values)):
            raise ErrorDomain('A CDF normal exige argumento finito.')
        result = special.ndtr(values)
        return float(result) if np.ndim(x) == 0 else result

    def gauss_hermite_rule(self, order: int) -> QuadratureRule:
        """
        Regra de Gauss-Hermite para integrais da forma ∫ f(x)·exp(-x²) dx.

        Exata para polinômios de grau até 2·order - 1. Nós cujos pesos sofrem underflow para zero
        (caudas extremas de ordens altas) são descartados.

        Raises:
            ErrorInvalidParameter: Se a ordem estiver fora de [2, 512].
        """
        QuadratureConfig.validate_order(int(order))
        return _hermite_rule(int(order))

    def normal_expectation(self, func: Callable[[np.ndarray], np.ndarray], order: int) -> np.ndarray:
        """
        Aproxima E[func(W)], W ~ N(0, 1), por Gauss-Hermite.

        `func` recebe o vetor de nós (já escalados por sqrt(2)) e pode devolver um array cuja
        última dimensão corresponde aos nós; o resultado é reduzido nessa dimensão.
        """
        rule = self.gauss_hermite_rule(order)
        values = func(math.sqrt(2.0) * rule.nodes)
        return rule.integrate(values) / math.sqrt(math.pi)

    def integrate_adaptive(self, f: Callable[[float], ArrayLike], a: float, b: float, tol: float = None,
                           rel_tol: float = 0.0, max_panels: int = None) -> Tuple[ArrayLike, float]:
        """
        Integra f em (a, b) com `scipy.integrate.quad_vec` (regra de Gauss-Kronrod de 15 pontos).

        `f` recebe um escalar e pode devolver escalar ou array. Limites infinitos são aceitos.

        Args:
            f: Integrando.
            a (float): Limite inferior (pode ser -inf).
            b (float): Limite superior (pode ser +inf).
            tol (float): Tolerância absoluta; padrão `QuadratureConfig.ADAPTIVE_TOLERANCE`.
            rel_tol (float): Tolerância relativa adicional (o critério é max(tol, rel_tol·|valor|)).
            max_panels (int): Número máximo de subintervalos; padrão `QuadratureConfig.ADAPTIVE_MAX_PANELS`.

        Returns:
            Tuple[float | np.ndarray, float]: (valor, estimativa de erro).

        Raises:
            ErrorDomain: Se a >= b, se a tolerância não for positiva ou se f produzir valores não finitos.
            ErrorConvergence: Se o limite de subintervalos se esgotar; `best_estimate` traz (valor, erro).
            ErrorExecution: Se a rotina do scipy falhar com um erro que não é do domínio.
        """
        tol = QuadratureConfig.ADAPTIVE_TOLERANCE if tol is None else float(tol)
        max_panels = QuadratureConfig.ADAPTIVE_MAX_PANELS if max_panels is None else int(max_panels)
        if math.isnan(a) or math.isnan(b) or not a < b:
            raise ErrorDomain(f'Intervalo de integração inválido: ({a}, {b}).')
        if not tol > 0.0:
            raise ErrorDomain('A tolerância da quadratura deve ser positiva.')

        try:
            value, err, info = integrate.quad_vec(f, float(a), float(b), epsabs=tol, epsrel=float(rel_tol),
                                                  quadrature='gk15', limit=max_panels, full_output=True)
        except (ArithmeticError, TypeError, ValueError) as e:
            self._log_and_raise_error(ErrorExecution, 'Falha na quadratura adaptativa', e, details={'interval': (a, b)})
        value = np.asarray(value)
        value = value.item() if value.size == 1 else value
        if info.status == _QUAD_NOT_A_NUMBER or not np.all(np.isfinite(value)):
            raise ErrorDomain('Integrando não finito em um nó de quadratura.', details={'interval': (a, b)})
        if info.status == _QUAD_NOT_CONVERGED:
            self._logger.warning(f'Quadratura adaptativa esgotou {max_panels} subintervalos (erro estimado {err:.3e}).')
            raise ErrorConvergence('A quadratura adaptativa não atingiu a tolerância.', best_estimate=(value, err),
                                   details={'panels': info.intervals.shape[0], 'err_est': err, 'tol': tol})
        if info.status == _QUAD_ROUNDING:
            self._logger.debug(f'Quadratura limitada por arredondamento (erro estimado {err:.3e}).')
        return value, err

