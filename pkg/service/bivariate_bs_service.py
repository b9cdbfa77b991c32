from exception.error_domain import ErrorDomain
from infrastructure.base_service import BaseService
from model.bs_params import BivBsParams, BsParams
from scipy import special
from typing import Union
import math

import numpy as np

ArrayLike = Union[float, np.ndarray]

_LOG_2PI = math.log(2.0 * math.pi)


def _as_positive(t: ArrayLike, name: str) -> np.ndarray:
    values = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(values)) or np.any(values <= 0.0):
        raise ErrorDomain(f'{name} exige argumentos positivos e finitos.')
    return values


def _like(template: ArrayLike, values: np.ndarray) -> ArrayLike:
    return float(values) if np.ndim(template) == 0 else values


class BivariateBsService(BaseService):
    """
    Primitivas da Birnbaum-Saunders: a transformação a(t; alpha, beta), sua derivada e inversa,
    densidade e CDF marginais, densidade conjunta bivariada e CDF condicional de X dado Y.

    T ~ BS(alpha, beta) se e somente se a(T; alpha, beta) ~ N(0, 1). Todas as funções aceitam
    escalares ou arrays numpy.
    """

    def a_transform(self, t: ArrayLike, p: BsParams) -> ArrayLike:
        """
        a(t) = (1/alpha)(sqrt(t/beta) - sqrt(beta/t)), estritamente crescente, com a(beta) = 0.

        Raises:
            ErrorDomain: Se algum t for não positivo.
        """
        values = _as_positive(t, 'a_transform')
        root = np.sqrt(values / p.beta)
        return _like(t, (root - 1.0 / root) / p.alpha)

    def a_derivative(self, t: ArrayLike, p: BsParams) -> ArrayLike:
        """a'(t) = (1/(2·alpha·t))(sqrt(t/beta) + sqrt(beta/t))."""
        values = _as_positive(t, 'a_derivative')
        root = np.sqrt(values / p.beta)
        return _like(t, (root + 1.0 / root) / (2.0 * p.alpha * values))

    def log_a_derivative(self, t: ArrayLike, p: BsParams) -> ArrayLike:
        values = _as_positive(t, 'log_a_derivative')
        root = np.sqrt(values / p.beta)
        return _like(t, np.log(root + 1.0 / root) - math.log(2.0 * p.alpha) - np.log(values))

    def a_inverse(self, u: ArrayLike, p: BsParams) -> ArrayLike:
        """
        a^{-1}(u) = (beta/4)[alpha·u + sqrt((alpha·u)² + 4)]².

        Para alpha·u < 0 a soma é reescrita como 4/(sqrt((alpha·u)² + 4) - alpha·u), evitando cancelamento.

        Raises:
            ErrorDomain: Se u não for finito.
        """
        values = np.asarray(u, dtype=float)
        if not np.all(np.isfinite(values)):
            raise ErrorDomain('a_inverse exige argumento finito.')
        au = p.alpha * values
        radical = np.hypot(au, 2.0)
        with np.errstate(divide='ignore'):
            total = np.where(au >= 0.0, au + radical, 4.0 / (radical - au))
        return _like(u, 0.25 * p.beta * total * total)

    def bs_pdf(self, t: ArrayLike, p: BsParams) -> ArrayLike:
        """Densidade marginal BS: phi(a(t))·a'(t)."""
        values = _as_positive(t, 'bs_pdf')
        a = np.asarray(self.a_transform(values, p))
        log_density = -0.5 * a * a - 0.5 * _LOG_2PI + np.asarray(self.log_a_derivative(values, p))
        return _like(t, np.exp(log_density))

    def bs_cdf(self, t: ArrayLike, p: BsParams) -> ArrayLike:
        """CDF marginal BS: Phi(a(t))."""
        values = _as_positive(t, 'bs_cdf')
        return _like(t, special.ndtr(np.asarray(self.a_transform(values, p))))

    @staticmethod
    def log_phi2(u: ArrayLike, v: ArrayLike, rho: float) -> ArrayLike:
        """log da densidade normal bivariada padrão com correlação rho."""
        one_minus = 1.0 - rho * rho
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        quad = (u * u + v * v - 2.0 * rho * u * v) / (2.0 * one_minus)
        return -_LOG_2PI - 0.5 * math.log(one_minus) - quad

    def biv_bs_log_pdf(self, x: ArrayLike, y: ArrayLike, p: BivBsParams) -> ArrayLike:
        """log f_{X,Y}(x, y) = log phi2(a(x), a(y); rho) + log a'(x) + log a'(y)."""
        xs = _as_positive(x, 'biv_bs_pdf')
        ys = _as_positive(y, 'biv_bs_pdf')
        ax = np.asarray(self.a_transform(xs, p.x))
        ay = np.asarray(self.a_transform(ys, p.y))
        result = self.log_phi2(ax, ay, p.rho) + np.asarray(self.log_a_derivative(xs, p.x)) + np.asarray(self.log_a_derivative(ys, p.y))
        return float(result) if np.ndim(x) == 0 and np.ndim(y) == 0 else result

    def biv_bs_pdf(self, x: ArrayLike, y: ArrayLike, p: BivBsParams) -> ArrayLike:
        """
        Densidade conjunta da Birnbaum-Saunders bivariada, avaliada em escala logarítmica.

        Raises:
            ErrorDomain: Se x ou y forem não positivos.
        """
        result = np.exp(self.biv_bs_log_pdf(x, y, p))
        return float(result) if np.ndim(result) == 0 else result

    def conditional_cdf_x_given_y(self, x: ArrayLike, y: ArrayLike, p: BivBsParams) -> ArrayLike:
        """
        P(X <= x | Y = y) = Phi{(a(x; alpha1, beta1) - rho·a(y; alpha2, beta2)) / sqrt(1 - rho²)}.

        Raises:
            ErrorDomain: Se x ou y forem não positivos.
        """
        xs = _as_positive(x, 'conditional_cdf_x_given_y')
        ys = _as_positive(y, 'conditional_cdf_x_given_y')
        ax = np.asarray(self.a_transform(xs, p.x))
        ay = np.asarray(self.a_transform(ys, p.y))
        result = special.ndtr((ax - p.rho * ay) / math.sqrt(1.0 - p.rho * p.rho))
        return float(result) if np.ndim(x) == 0 and np.ndim(y) == 0 else result
