from config.numerics_config import QuadratureConfig
from exception.error_convergence import ErrorConvergence
from exception.error_domain import ErrorDomain
from exception.error_numerical_anomaly import ErrorNumericalAnomaly
from exception.error_unsupported_parameter import ErrorUnsupportedParameter
from infrastructure.base_service import BaseService
from model.modality_report import CriticalKind, CriticalPoint, Modality, ModalityReport
from model.ubbs1_params import Ubbs1Params
from model.uv_intermediates import UvIntermediates
from scipy import optimize, special
from service.specfun_service import SpecfunService
from typing import List, NamedTuple, Optional, Sequence, Union
import math

import numpy as np

ArrayLike = Union[float, np.ndarray]

_LOG_4PI = math.log(4.0 * math.pi)
# Limites em logit(z) da busca do quantil; expit(36) ainda é representável abaixo de 1.
_LOGIT_BRACKET = 36.0


class DensityTerms(NamedTuple):
    """Grandezas intermediárias da densidade avaliadas em cada ponto z."""
    z: np.ndarray
    s: np.ndarray
    log_s: np.ndarray
    sqrt_s: np.ndarray
    c: np.ndarray
    u: np.ndarray
    v: np.ndarray
    w: np.ndarray
    q: np.ndarray
    d: np.ndarray
    k0e: np.ndarray
    k1e: np.ndarray
    bracket: np.ndarray


def _as_unit(z: ArrayLike, name: str = 'z') -> np.ndarray:
    values = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(values)) or np.any(values <= 0.0) or np.any(values >= 1.0):
        raise ErrorDomain(f'{name} deve estar estritamente em (0, 1).')
    return values


def _like(template: ArrayLike, values: np.ndarray) -> ArrayLike:
    return float(values) if np.ndim(template) == 0 else values


class Ubbs1Service(BaseService):
    """
    Serviço da distribuição UBBS1, a lei de Z = Y/(X+Y) para (X, Y) Birnbaum-Saunders bivariada.

    Implementa densidade (em escala logarítmica), densidade do caso independente, densidade e CDF
    da razão do tipo II, CDF por Gauss-Hermite com verificação por duplicação de ordem, quantil,
    momentos, função geradora de momentos, probabilidade de estresse-resistência e classificação
    de modalidade. Todas as operações são puras dado o vetor de parâmetros.
    """

    def __init__(self):
        super().__init__()
        self._specfun = SpecfunService()

    # ------------------------------------------------------------------ densidade

    def density_terms(self, z: ArrayLike, p: Ubbs1Params) -> DensityTerms:
        """
        Calcula s, c, u_rho, v_rho, o argumento de Bessel w e o colchete escalado c·K0e(w) + d·K1e(w).

        u_rho e v_rho são avaliados completando o quadrado, o que garante positividade mesmo com
        rho próximo de +-1. log s é obtido como log1p(-z) - log z.

        Raises:
            ErrorDomain: Se algum z estiver fora de (0, 1).
        """
        z = np.atleast_1d(_as_unit(z))
        a1, a2, b1, b2, rho = p.as_tuple()
        one_minus = 1.0 - rho * rho
        s = (1.0 - z) / z
        log_s = np.log1p(-z) - np.log(z)
        sqrt_s = np.exp(0.5 * log_s)

        sqrt_t = sqrt_s * math.sqrt(b2 / b1)
        c = sqrt_t + 1.0 / sqrt_t
        u = (sqrt_s / (a1 * math.sqrt(b1)) - rho / (a2 * math.sqrt(b2))) ** 2 + one_minus / (a2 * a2 * b2)
        v = (math.sqrt(b1) / (a1 * sqrt_s) - rho * math.sqrt(b2) / a2) ** 2 + one_minus * b2 / (a2 * a2)
        log_u, log_v = np.log(u), np.log(v)
        w = np.exp(0.5 * (log_u + log_v)) / one_minus
        log_q = log_v - log_u + log_s - math.log(b1 * b2)
        q = np.exp(log_q)
        d = np.exp(0.5 * log_q) + np.exp(-0.5 * log_q)

        k0e = np.asarray(self._specfun.bessel_k_scaled(0, w))
        k1e = np.asarray(self._specfun.bessel_k_scaled(1, w))
        bracket = c * k0e + d * k1e
        return DensityTerms(z, s, log_s, sqrt_s, c, u, v, w, q, d, k0e, k1e, bracket)

    def log_pdf(self, z: ArrayLike, p: Ubbs1Params) -> ArrayLike:
        """
        Logaritmo natural da densidade UBBS1.

        O fator exp{(1/alpha1² + 1/alpha2²)/(1 - rho²)} nunca é materializado: o expoente entra
        somado, o argumento de Bessel w é subtraído e o colchete usa as funções de Bessel escaladas.

        Args:
            z (float | np.ndarray): Ponto(s) em (0, 1).
            p (Ubbs1Params): Parâmetros da distribuição.

        Returns:
            float | np.ndarray: log f_Z(z).

        Raises:
            ErrorDomain: Se algum z estiver fora de (0, 1).
        """
        terms = self.density_terms(z, p)
        a1, a2, _, _, rho = p.as_tuple()
        one_minus = 1.0 - rho * rho
        exponent = (1.0 / (a1 * a1) + 1.0 / (a2 * a2)) / one_minus
        constant = exponent - _LOG_4PI - math.log(a1 * a2) - 0.5 * math.log(one_minus)
        result = (constant - 2.0 * np.log(terms.z) - terms.log_s - rho * terms.c / (a1 * a2 * one_minus)
                  - terms.w + np.log(terms.bracket))
        return float(result[0]) if np.ndim(z) == 0 else result

    def pdf(self, z: ArrayLike, p: Ubbs1Params) -> ArrayLike:
        """Densidade f_Z(z) = exp(log_pdf(z)); tende a 0 nas extremidades de (0, 1)."""
        result = np.exp(self.log_pdf(z, p))
        return _like(z, result)

    def independent_pdf(self, z: ArrayLike, p: Ubbs1Params) -> ArrayLike:
        """
        Densidade do caso independente (rho = 0) avaliada pela forma fechada própria desse caso.

        Usa u e v sem completar o quadrado e combina os termos de Bessel por logaddexp; serve de
        referência independente para `pdf`.

        Raises:
            ErrorUnsupportedParameter: Se rho for diferente de zero.
            ErrorDomain: Se algum z estiver fora de (0, 1).
        """
        if p.rho != 0.0:
            raise ErrorUnsupportedParameter('A densidade do caso independente exige rho = 0.', details={'rho': p.rho})
        values = _as_unit(z)
        a1, a2, b1, b2, _ = p.as_tuple()
        s = (1.0 - values) / values
        u = s / (a1 * a1 * b1) + 1.0 / (a2 * a2 * b2)
        v = b1 / (a1 * a1 * s) + b2 / (a2 * a2)
        x = np.sqrt(u * v)
        c = np.sqrt(b2 * s / b1) + np.sqrt(b1 / (b2 * s))
        ratio = (v / u) * s / (b1 * b2)
        d = np.sqrt(ratio) + 1.0 / np.sqrt(ratio)
        log_bracket = np.logaddexp(np.log(c) + self._specfun.log_bessel_k(0, x), np.log(d) + self._specfun.log_bessel_k(1, x))
        result = (1.0 / (a1 * a1) + 1.0 / (a2 * a2)) - _LOG_4PI - math.log(a1 * a2) + 2.0 * np.log1p(s) - np.log(s) + log_bracket
        return _like(z, np.exp(result))

    def uv_intermediates(self, z: float, p: Ubbs1Params) -> UvIntermediates:
        """Expõe s = 1/z - 1 e as formas quadráticas u_rho, v_rho em um ponto z."""
        terms = self.density_terms(float(z), p)
        return UvIntermediates(s=float(terms.s[0]), u_rho=float(terms.u[0]), v_rho=float(terms.v[0]))

    def type2_ratio_pdf(self, s: ArrayLike, p: Ubbs1Params) -> ArrayLike:
        """
        Densidade da razão do tipo II S = X/Y no caso independente: f_S(s) = f_Z(1/(s+1))/(s+1)².

        Raises:
            ErrorDomain: Se algum s for não positivo.
            ErrorUnsupportedParameter: Se rho for diferente de zero.
        """
        values = self._type2_argument(s, p)
        z = 1.0 / (values + 1.0)
        result = np.exp(np.asarray(self.log_pdf(z, p)) - 2.0 * np.log1p(values))
        return _like(s, result)

    def type2_ratio_cdf(self, s: ArrayLike, p: Ubbs1Params) -> ArrayLike:
        """
        CDF da razão do tipo II: P(S <= s) = 1 - F_Z(1/(s+1)).

        Raises:
            ErrorDomain: Se algum s for não positivo.
            ErrorUnsupportedParameter: Se rho for diferente de zero.
        """
        values = self._type2_argument(s, p)
        z = 1.0 / (values + 1.0)
        return _like(s, self.survival(z, p))

    @staticmethod
    def _type2_argument(s: ArrayLike, p: Ubbs1Params) -> np.ndarray:
        if p.rho != 0.0:
            raise ErrorUnsupportedParameter('A razão do tipo II só é suportada com rho = 0.', details={'rho': p.rho})
        values = np.asarray(s, dtype=float)
        if not np.all(np.isfinite(values)) or np.any(values <= 0.0):
            raise ErrorDomain('s deve ser positivo e finito.')
        return values

    # ------------------------------------------------------------------ CDF

    def _erf_argument(self, s: np.ndarray, w: np.ndarray, p: Ubbs1Params) -> np.ndarray:
        """
        Argumento da função erro na integral da CDF, para cada par (s, w) por broadcasting.

        Para alpha2·w < 0, 1/(alpha2·w + sqrt((alpha2·w)² + 4)) é reescrito como
        (sqrt((alpha2·w)² + 4) - alpha2·w)/4.
        """
        a1, a2, b1, b2, rho = p.as_tuple()
        one_minus = 1.0 - rho * rho
        s = np.asarray(s, dtype=float)[..., np.newaxis]
        c1 = ((a2 / a1) * np.sqrt(s * b2 / b1) - rho) / math.sqrt(2.0 * one_minus)
        c2 = math.sqrt(2.0) * (s * b2 - b1) / (a1 * np.sqrt(s * b1 * b2 * one_minus))
        aw = a2 * w
        radical = np.hypot(aw, 2.0)
        with np.errstate(divide='ignore'):
            inverse = np.where(aw >= 0.0, 1.0 / (aw + radical), 0.25 * (radical - aw))
        return c1 * w + c2 * inverse

    def _cdf_gauss_hermite(self, s: np.ndarray, p: Ubbs1Params, order: int) -> np.ndarray:
        # F = 1/2 - E[erf(.)]/2 = E[erfc(.)]/2, sem cancelamento na cauda inferior.
        return 0.5 * self._specfun.normal_expectation(lambda w: special.erfc(self._erf_argument(s, w, p)), order)

    def _cdf_adaptive(self, s: float, p: Ubbs1Params) -> float:
        width = QuadratureConfig.INNER_WIDTH
        norm = 1.0 / math.sqrt(2.0 * math.pi)

        def integrand(w: np.ndarray) -> np.ndarray:
            return 0.5 * special.erfc(self._erf_argument(np.array(s), w, p)) * norm * np.exp(-0.5 * w * w)

        value, _ = self._specfun.integrate_adaptive(integrand, -width, width, tol=QuadratureConfig.ADAPTIVE_TOLERANCE)
        return value

    def cdf(self, z: ArrayLike, p: Ubbs1Params, order: Optional[int] = None, validate: bool = True) -> ArrayLike:
        """
        CDF F_Z(z) = 1/2 - (1/2)·E[erf{c1(s)·W + c2(s)/(alpha2·W + sqrt((alpha2·W)² + 4))}], W ~ N(0, 1).

        A esperança é aproximada por Gauss-Hermite de ordem m e, com `validate`, reavaliada com
        ordem 2m. Pontos em que as duas ordens divergem mais que `CDF_CHECK_TOLERANCE` são
        recalculados por quadratura adaptativa em w.

        Args:
            z (float | np.ndarray): Ponto(s) em (0, 1).
            p (Ubbs1Params): Parâmetros.
            order (int): Ordem de Gauss-Hermite; padrão `QuadratureConfig.gauss_hermite_order()`.
            validate (bool): Se verdadeiro, aplica a verificação por duplicação de ordem.

        Returns:
            float | np.ndarray: F_Z(z), com a mesma forma de `z`.

        Raises:
            ErrorDomain: Se algum z estiver fora de (0, 1).
            ErrorConvergence: Se a quadratura adaptativa de recurso também falhar.
        """
        values = np.atleast_1d(_as_unit(z))
        order = QuadratureConfig.gauss_hermite_order() if order is None else QuadratureConfig.validate_order(int(order))
        s = (1.0 - values) / values
        result = self._cdf_gauss_hermite(s, p, order)

        if validate:
            refined = self._cdf_gauss_hermite(s, p, min(2 * order, QuadratureConfig.MAX_ORDER))
            disagree = np.abs(refined - result) > QuadratureConfig.CDF_CHECK_TOLERANCE
            result = refined
            if np.any(disagree):
                self._logger.debug(f'CDF: {int(disagree.sum())} ponto(s) sem concordância entre as ordens {order} e {2 * order}; usando quadratura adaptativa.')
                for index in np.flatnonzero(disagree):
                    result[index] = self._cdf_with_fallback(float(s[index]), p, float(values[index]))

        result = np.clip(result, 0.0, 1.0)
        return float(result[0]) if np.ndim(z) == 0 else result

    def _cdf_with_fallback(self, s: float, p: Ubbs1Params, z: float) -> float:
        try:
            return self._cdf_adaptive(s, p)
        except ErrorConvergence as e:
            self._log_and_raise_warning(ErrorConvergence, f'CDF não convergiu em z = {z:.6g}', e,
                                        best_estimate=e.best_estimate, details={'z': z, 'params': str(p)})

    def survival(self, z: ArrayLike, p: Ubbs1Params, order: Optional[int] = None) -> ArrayLike:
        """1 - F_Z(z), avaliada pelo complemento da integral (sem cancelamento na cauda superior)."""
        values = np.atleast_1d(_as_unit(z))
        reflected = self.cdf(1.0 - values, p.reflected(), order=order)
        return _like(z, np.asarray(reflected))

    # ------------------------------------------------------------------ quantil

    def quantile(self, q: float, p: Ubbs1Params) -> float:
        """
        Quantil z com |F_Z(z) - q| <= `QUANTILE_TOLERANCE`, por Brent em logit(z).

        Raises:
            ErrorDomain: Se q estiver fora de (0, 1).
            ErrorConvergence: Se a raiz não puder ser isolada ou a tolerância não for atingida.
        """
        q = float(q)
        if not 0.0 < q < 1.0:
            raise ErrorDomain(f'q deve estar em (0, 1), recebido {q!r}.')

        def residual(x: float) -> float:
            return self.cdf(special.expit(x), p) - q

        lo, hi = -_LOGIT_BRACKET, _LOGIT_BRACKET
        f_lo, f_hi = residual(lo), residual(hi)
        if f_lo > 0.0 or f_hi < 0.0:
            self._log_and_raise_warning(ErrorConvergence, f'Quantil {q} fora do intervalo representável de z.',
                                        details={'q': q, 'cdf_lo': f_lo + q, 'cdf_hi': f_hi + q})
        try:
            x, info = optimize.brentq(residual, lo, hi, xtol=1e-14, rtol=4 * np.finfo(float).eps, maxiter=200, full_output=True)
        except RuntimeError as e:
            self._log_and_raise_warning(ErrorConvergence, f'Busca do quantil {q} não convergiu', e, details={'q': q})
        z = float(special.expit(x))
        gap = abs(self.cdf(z, p) - q)
        if gap > QuadratureConfig.QUANTILE_TOLERANCE and z * (1.0 - z) > np.finfo(float).eps:
            self._log_and_raise_warning(ErrorConvergence, f'Quantil {q} com resíduo {gap:.3e} acima da tolerância.',
                                        best_estimate=z, details={'q': q, 'residual': gap, 'iterations': info.iterations})
        return z

    # ------------------------------------------------------------------ momentos

    def moment(self, n: int, p: Ubbs1Params) -> float:
        """
        Momento bruto mu_n = n·∫ z^{n-1}[1 - F_Z(z)] dz, com quadratura adaptativa em (eps, 1 - eps).

        Raises:
            ErrorDomain: Se n < 1.
            ErrorConvergence: Se a integral externa não atingir `MOMENT_TOLERANCE`.
        """
        if int(n) != n or n < 1:
            raise ErrorDomain(f'A ordem do momento deve ser um inteiro >= 1, recebido {n!r}.')
        n = int(n)
        eps = QuadratureConfig.MOMENT_EPSILON

        def integrand(z: np.ndarray) -> np.ndarray:
            return n * z ** (n - 1) * np.asarray(self.survival(z, p))

        try:
            value, err = self._specfun.integrate_adaptive(integrand, eps, 1.0 - eps, tol=QuadratureConfig.MOMENT_TOLERANCE)
        except ErrorConvergence as e:
            self._log_and_raise_warning(ErrorConvergence, f'Momento de ordem {n} não convergiu', e,
                                        best_estimate=e.best_estimate, details={'n': n, 'params': str(p)})
        self._logger.debug(f'mu_{n} = {value:.10g} (erro estimado {err:.2e})')
        return value

    def moments(self, orders: Sequence[int], p: Ubbs1Params) -> List[float]:
        return [self.moment(n, p) for n in orders]

    def mgf(self, t: float, p: Ubbs1Params, terms: int = 30) -> float:
        """
        Função geradora de momentos pela série de potências M(t) = 1 + sum_{n=1}^{terms} mu_n·t^n/n!.

        Raises:
            ErrorDomain: Se |t| > 50 ou terms < 1.
        """
        t = float(t)
        if not math.isfinite(t) or abs(t) > 50.0:
            raise ErrorDomain(f'mgf exige |t| <= 50, recebido {t!r}.')
        if int(terms) != terms or terms < 1:
            raise ErrorDomain(f'terms deve ser um inteiro >= 1, recebido {terms!r}.')
        if t == 0.0:
            return 1.0
        total, coefficient = [1.0], 1.0
        for n in range(1, int(terms) + 1):
            coefficient *= t / n
            total.append(self.moment(n, p) * coefficient)
        return math.fsum(total)

    # ------------------------------------------------------------------ estresse-resistência

    def stress_strength(self, p: Ubbs1Params, route: str = 'integral', order: Optional[int] = None) -> float:
        """
        Probabilidade de estresse-resistência R = P(X < Y).

        Duas rotas: `integral` avalia R = 1/2 + (1/2)·E[erf{...}] em s = 1 diretamente; `cdf` usa
        R = 1 - F_Z(1/2). Com beta1 = beta2 o resultado é 1/2 para qualquer rho.

        Raises:
            ErrorDomain: Se a rota não for reconhecida.
        """
        if route == 'cdf':
            return 1.0 - self.cdf(0.5, p, order=order)
        if route != 'integral':
            raise ErrorDomain(f'Rota de estresse-resistência desconhecida: {route!r}.')
        order = QuadratureConfig.gauss_hermite_order() if order is None else QuadratureConfig.validate_order(int(order))
        one = np.array([1.0])
        value = 0.5 + 0.5 * self._specfun.normal_expectation(lambda w: special.erf(self._erf_argument(one, w, p)), order)
        return float(value[0])

    # ------------------------------------------------------------------ modalidade

    def classify_modality(self, p: Ubbs1Params, grid_size: int = 2001) -> ModalityReport:
        """
        Classifica a densidade como unimodal ou bimodal.

        Procura trocas de sinal da derivada numérica (diferença central, passo `MODALITY_STEP`) de
        log_pdf em uma grade uniforme e refina cada uma por bissecção até `MODALITY_TOLERANCE`.

        Raises:
            ErrorDomain: Se grid_size < 501.
            ErrorNumericalAnomaly: Se o número de pontos críticos não for 1 ou 3 com padrão máx/mín/máx.
        """
        if grid_size < 501:
            raise ErrorDomain(f'grid_size deve ser >= 501, recebido {grid_size}.')
        grid = np.arange(1, grid_size + 1) / (grid_size + 1.0)
        slope = self._log_pdf_slope(grid, p)
        signs = np.sign(slope)
        # Derivada exatamente nula conta como subida; o cruzamento cai no intervalo seguinte.
        signs[signs == 0.0] = 1.0

        points: List[CriticalPoint] = []
        for i in np.flatnonzero(signs[:-1] * signs[1:] < 0.0):
            kind = CriticalKind.MAX if signs[i] > 0 else CriticalKind.MIN
            points.append(CriticalPoint(z=self._refine_critical(grid[i], grid[i + 1], p), kind=kind))

        kinds = [point.kind for point in points]
        if kinds == [CriticalKind.MAX]:
            return ModalityReport(kind=Modality.UNIMODAL, critical_points=points)
        if kinds == [CriticalKind.MAX, CriticalKind.MIN, CriticalKind.MAX]:
            return ModalityReport(kind=Modality.BIMODAL, critical_points=points)
        self._log_and_raise_warning(ErrorNumericalAnomaly, f'Padrão de pontos críticos inesperado: {[k.value for k in kinds]}.',
                                    details={'critical_points': [point.to_dict() for point in points], 'params': str(p)})

    def _log_pdf_slope(self, z: np.ndarray, p: Ubbs1Params) -> np.ndarray:
        h = QuadratureConfig.MODALITY_STEP
        return (np.asarray(self.log_pdf(z + h, p)) - np.asarray(self.log_pdf(z - h, p))) / (2.0 * h)

    def _refine_critical(self, lo: float, hi: float, p: Ubbs1Params) -> float:
        slope_lo = float(self._log_pdf_slope(np.array([lo]), p)[0])
        while hi - lo > QuadratureConfig.MODALITY_TOLERANCE:
            mid = 0.5 * (lo + hi)
            slope_mid = float(self._log_pdf_slope(np.array([mid]), p)[0])
            if slope_mid == 0.0:
                return mid
            if (slope_mid > 0.0) == (slope_lo > 0.0):
                lo, slope_lo = mid, slope_mid
            else:
                hi = mid
        return 0.5 * (lo + hi)
