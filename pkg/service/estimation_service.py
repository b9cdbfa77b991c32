from config.optimizer_config import OptimizerConfig
from exception.error_convergence import ErrorConvergence
from exception.error_insufficient_data import ErrorInsufficientData
from exception.error_invalid_parameter import ErrorInvalidParameter
from infrastructure.base_error import BaseError
from infrastructure.base_service import BaseService
from joblib import Parallel, delayed
from model.beta_params import BetaParams
from model.fit_result import FitMethod, FitResult
from model.param_transform import ParamTransform
from model.ubbs1_params import Ubbs1Params
from model.unit_sample import UnitSample
from scipy import optimize, special, stats
from service.ubbs1_service import DensityTerms, Ubbs1Service
from typing import List, NamedTuple, Optional
import itertools
import math

import numpy as np

UBBS1_PARAMETERS = 5
BETA_PARAMETERS = 2
MIN_FIT_SIZE = 6

_LOG_4PI = math.log(4.0 * math.pi)


class _StartOutcome(NamedTuple):
    index: int
    objective: float
    xi: Optional[np.ndarray]
    iterations: int
    converged: bool
    gradient_norm: Optional[float]
    message: str


class EstimationService(BaseService):
    """
    Estimação dos parâmetros da UBBS1 por máxima verossimilhança (com gradiente analítico) e por
    máximo produto de espaçamentos, além do ajuste da Beta usado como referência na seleção de modelos.

    O ajuste trabalha na reparametrização irrestrita de `ParamTransform`: Nelder-Mead a partir de
    cada início, seguido de BFGS (gradiente analítico para mle, diferenças finitas para mps).
    """

    def __init__(self):
        super().__init__()
        self._ubbs1 = Ubbs1Service()

    # ------------------------------------------------------------------ log-verossimilhança

    def _loglik_terms(self, terms: DensityTerms, p: Ubbs1Params) -> np.ndarray:
        a1, a2, _, _, rho = p.as_tuple()
        one_minus = 1.0 - rho * rho
        exponent = (1.0 / (a1 * a1) + 1.0 / (a2 * a2)) / one_minus
        constant = exponent - _LOG_4PI - math.log(a1 * a2) - 0.5 * math.log(one_minus)
        return constant - rho * terms.c / (a1 * a2 * one_minus) - terms.w + np.log(terms.bracket)

    def log_likelihood(self, sample: UnitSample, p: Ubbs1Params) -> float:
        """
        Log-verossimilhança l(theta) sem a constante sum log[(s_i+1)²/s_i], que não depende de theta.

        Returns:
            float: sum_i log_pdf(z_i) - sum_i log[(s_i+1)²/s_i].
        """
        terms = self._ubbs1.density_terms(sample.values, p)
        return math.fsum(self._loglik_terms(terms, p))

    def log_likelihood_gradient(self, sample: UnitSample, p: Ubbs1Params) -> np.ndarray:
        """
        Gradiente analítico de l em (alpha1, alpha2, beta1, beta2, rho).

        Usa as derivadas de u_rho, v_rho, c e d em cada observação e a identidade
        K_nu'(x) = -K_{nu-1}(x) - (nu/x)·K_nu(x) (com K_{-1} = K_1), tudo em forma escalada.

        Returns:
            np.ndarray: Vetor com as 5 derivadas parciais.
        """
        terms = self._ubbs1.density_terms(sample.values, p)
        a1, a2, b1, b2, rho = p.as_tuple()
        om = 1.0 - rho * rho
        s, rs = terms.s, terms.sqrt_s
        rb = math.sqrt(b1 * b2)
        c, u, v, w, q, d = terms.c, terms.u, terms.v, terms.w, terms.q, terms.d
        k0e, k1e, bracket = terms.k0e, terms.k1e, terms.bracket

        # Derivadas de u_rho e v_rho.
        du = [
            -2.0 * s / (a1 ** 3 * b1) + 2.0 * rho * rs / (a1 * a1 * a2 * rb),
            -2.0 / (a2 ** 3 * b2) + 2.0 * rho * rs / (a1 * a2 * a2 * rb),
            -s / (a1 * a1 * b1 * b1) + rho * rs / (a1 * a2 * b1 * rb),
            -1.0 / (a2 * a2 * b2 * b2) + rho * rs / (a1 * a2 * b2 * rb),
            -2.0 * rs / (a1 * a2 * rb),
        ]
        dv = [
            -2.0 * b1 / (a1 ** 3 * s) + 2.0 * rho * rb / (a1 * a1 * a2 * rs),
            -2.0 * b2 / a2 ** 3 + 2.0 * rho * rb / (a1 * a2 * a2 * rs),
            1.0 / (a1 * a1 * s) - rho * math.sqrt(b2 / b1) / (a1 * a2 * rs),
            1.0 / (a2 * a2) - rho * math.sqrt(b1 / b2) / (a1 * a2 * rs),
            -2.0 * rb / (a1 * a2 * rs),
        ]
        # Derivadas de log t (t = beta2·s/beta1) e dos termos que não dependem de u, v.
        dlog_t = [0.0, 0.0, -1.0 / b1, 1.0 / b2, 0.0]
        sqrt_t = np.sqrt(b2 * s / b1)
        half_c = 0.5 * (sqrt_t - 1.0 / sqrt_t)
        sqrt_q = np.sqrt(q)
        half_d = 0.5 * (sqrt_q - 1.0 / sqrt_q)
        dlog_q_beta = [0.0, 0.0, -1.0 / b1, -1.0 / b2, 0.0]
        dlog_om = [0.0, 0.0, 0.0, 0.0, -2.0 * rho / om]
        bessel_w = c * k1e + d * (k0e + k1e / w)

        gradient = np.empty(5)
        for k in range(5):
            dc = half_c * dlog_t[k]
            dw = w * (0.5 * du[k] / u + 0.5 * dv[k] / v - dlog_om[k])
            dd = half_d * (dv[k] / v - du[k] / u + dlog_q_beta[k])
            dlog_g = (dc * k0e + dd * k1e - bessel_w * dw) / bracket
            gradient[k] = math.fsum(self._dt(k, c, dc, a1, a2, rho, om) + dlog_g)
        return gradient

    @staticmethod
    def _dt(k: int, c, dc, a1: float, a2: float, rho: float, om: float):
        """Derivada do termo sem Bessel de cada observação em relação ao parâmetro k."""
        if k == 0:
            return -2.0 / (a1 ** 3 * om) - 1.0 / a1 + rho * c / (a1 * a1 * a2 * om)
        if k == 1:
            return -2.0 / (a2 ** 3 * om) - 1.0 / a2 + rho * c / (a1 * a2 * a2 * om)
        if k in (2, 3):
            return -rho * dc / (a1 * a2 * om)
        energy = 1.0 / (a1 * a1) + 1.0 / (a2 * a2)
        return 2.0 * rho * energy / (om * om) + rho / om - c * (1.0 + rho * rho) / (a1 * a2 * om * om)

    # ------------------------------------------------------------------ produto de espaçamentos

    def spacings(self, sample: UnitSample, p: Ubbs1Params, validate: bool = True) -> np.ndarray:
        """Os n+1 espaçamentos Delta_i = F(z_(i)) - F(z_(i-1)), com F(z_(0)) = 0 e F(z_(n+1)) = 1."""
        cdf = np.asarray(self._ubbs1.cdf(sample.sorted_values, p, validate=validate))
        return np.diff(np.concatenate([[0.0], cdf, [1.0]]))

    def mps_objective(self, sample: UnitSample, p: Ubbs1Params, config: Optional[OptimizerConfig] = None,
                      validate: bool = True) -> float:
        """
        H(theta) = (1/(n+1))·sum log Delta_i.

        Espaçamentos não positivos (observações repetidas) recebem o piso `tie_floor` antes do
        logaritmo e geram uma advertência.

        Raises:
            ErrorInsufficientData: Se n < 2.
        """
        if sample.n < 2:
            raise ErrorInsufficientData(f'O produto de espaçamentos exige n >= 2, recebido {sample.n}.', details={'n': sample.n})
        value, floored = self._mps_value(sample, p, config or OptimizerConfig(), validate)
        if floored:
            self._logger.warning(f'{floored} espaçamento(s) nulo(s) substituído(s) pelo piso; há observações empatadas.')
        return value

    def _mps_value(self, sample: UnitSample, p: Ubbs1Params, config: OptimizerConfig, validate: bool):
        delta = self.spacings(sample, p, validate)
        floored = int(np.count_nonzero(delta < config.tie_floor))
        value = math.fsum(np.log(np.maximum(delta, config.tie_floor))) / (sample.n + 1)
        return value, floored

    # ------------------------------------------------------------------ ajuste

    def fit(self, sample: UnitSample, method: FitMethod = FitMethod.MLE, init: Optional[Ubbs1Params] = None,
            config: Optional[OptimizerConfig] = None) -> FitResult:
        """
        Ajusta a UBBS1 por mle ou mps com inícios múltiplos.

        Cada início passa por Nelder-Mead e depois por BFGS; fica o início convergido de melhor
        objetivo (empates resolvidos pelo índice). Como a lei de Z só identifica beta2/beta1, a média
        geométrica de (beta1, beta2) é fixada pela de `init`, ou por `config.beta_scale`.

        Args:
            sample (UnitSample): Amostra com pelo menos 6 observações.
            method (FitMethod): mle ou mps.
            init (Optional[Ubbs1Params]): Ponto inicial adicional.
            config (Optional[OptimizerConfig]): Configuração do otimizador.

        Returns:
            FitResult: Estimativas, objetivo, log-verossimilhança, AIC/BIC e diagnósticos.

        Raises:
            ErrorInsufficientData: Se n < 6.
            ErrorConvergence: Se nenhum início convergir; `best_estimate` traz o melhor FitResult obtido.
        """
        config = config or OptimizerConfig.from_env()
        method = FitMethod(method)
        if method not in (FitMethod.MLE, FitMethod.MPS):
            raise ErrorInvalidParameter(f'Método de ajuste UBBS1 desconhecido: {method.value}.')
        if sample.n < MIN_FIT_SIZE:
            raise ErrorInsufficientData(f'O ajuste de 5 parâmetros exige n >= {MIN_FIT_SIZE}, recebido {sample.n}.', details={'n': sample.n})

        anchor = math.log(math.sqrt(init.beta1 * init.beta2)) if init is not None else math.log(config.beta_scale)
        starts = self._starting_points(sample, method, init, anchor, config)
        self._logger.debug(f'Ajuste {method.value}: {len(starts)} início(s), n={sample.n}')

        outcomes: List[_StartOutcome] = Parallel(n_jobs=config.n_jobs)(
            delayed(self._run_start)(index, xi, sample, method, anchor, config) for index, xi in enumerate(starts))

        finished = [o for o in outcomes if o.xi is not None and math.isfinite(o.objective)]
        if not finished:
            self._log_and_raise_warning(ErrorConvergence, f'Todos os {len(starts)} inícios do ajuste {method.value} falharam.',
                                        details={'starts': [o.message for o in outcomes]})
        converged = [o for o in finished if o.converged]
        best = min(converged or finished, key=lambda o: (o.objective, o.index))
        result = self._assemble(sample, method, best, anchor, outcomes, config)
        if not converged:
            self._log_and_raise_warning(ErrorConvergence, f'Nenhum início do ajuste {method.value} convergiu.',
                                        best_estimate=result, details=result.diagnostics)
        self._logger.info(f'Ajuste {method.value} concluído: theta=({result.params}), loglik={result.loglik:.6f}')
        return result

    def _starting_points(self, sample: UnitSample, method: FitMethod, init: Optional[Ubbs1Params], anchor: float,
                         config: OptimizerConfig) -> List[np.ndarray]:
        """
        Grade alpha1 x alpha2 x rho com log(beta2/beta1) tirado da mediana amostral
        (mediana de Y/(X+Y) ~ beta2/(beta1+beta2)); os melhores pontos pelo objetivo viram inícios.
        """
        median = float(np.median(sample.values))
        log_ratio = math.log(median / (1.0 - median))
        candidates = [np.array([math.log(a1), math.log(a2), log_ratio, math.atanh(rho)])
                      for a1, a2, rho in itertools.product(config.alpha_grid, config.alpha_grid, config.rho_grid)]
        scored = sorted(((self._objective(xi, sample, method, anchor, config), index) for index, xi in enumerate(candidates)),
                        key=lambda item: (item[0], item[1]))
        count = config.n_starts - (1 if init is not None else 0)
        starts = [candidates[index] for value, index in scored[:max(count, 0)] if math.isfinite(value)]
        if init is not None:
            starts.insert(0, ParamTransform.reduce(ParamTransform.forward(init))[0])
        if not starts:
            starts = [candidates[index] for _, index in scored[:config.n_starts]]
        return starts

    def _params(self, xi, anchor: float) -> Ubbs1Params:
        return ParamTransform.backward(ParamTransform.expand(xi, anchor))

    def _objective(self, xi, sample: UnitSample, method: FitMethod, anchor: float, config: OptimizerConfig) -> float:
        """Objetivo minimizado: -l/n (mle) ou -H (mps); +inf fora da região avaliável."""
        try:
            if not np.all(np.isfinite(xi)):
                return math.inf
            p = self._params(xi, anchor)
            low, high = config.alpha_bounds
            if not (low <= p.alpha1 <= high and low <= p.alpha2 <= high):
                return math.inf
            if method == FitMethod.MLE:
                value = -self.log_likelihood(sample, p) / sample.n
            else:
                value = -self._mps_value(sample, p, config, validate=False)[0]
        except (BaseError, FloatingPointError, ValueError, OverflowError):
            return math.inf
        return value if math.isfinite(value) else math.inf

    def _reduced_gradient(self, xi, sample: UnitSample, anchor: float) -> np.ndarray:
        """Gradiente de -l/n em xi."""
        try:
            p = self._params(xi, anchor)
            grad_eta = self.log_likelihood_gradient(sample, p) * ParamTransform.jacobian_diagonal(p)
        except (BaseError, FloatingPointError, ValueError, OverflowError):
            return np.zeros(4)
        grad = -ParamTransform.reduce_gradient(grad_eta) / sample.n
        return grad if np.all(np.isfinite(grad)) else np.zeros(4)

    def _run_start(self, index: int, xi0: np.ndarray, sample: UnitSample, method: FitMethod, anchor: float,
                   config: OptimizerConfig) -> _StartOutcome:
        objective = lambda xi: self._objective(xi, sample, method, anchor, config)
        try:
            simplex = optimize.minimize(objective, xi0, method='Nelder-Mead',
                                        options={'maxiter': config.nelder_mead_maxiter, 'xatol': 1e-8, 'fatol': 1e-12})
            jac = (lambda xi: self._reduced_gradient(xi, sample, anchor)) if method == FitMethod.MLE else None
            polish = optimize.minimize(objective, simplex.x, jac=jac, method='BFGS',
                                       options={'maxiter': config.quasi_newton_maxiter, 'gtol': config.gradient_tolerance})
        except (BaseError, ArithmeticError, ValueError) as e:
            self._logger.debug(f'Início {index} falhou: {e}')
            return _StartOutcome(index, math.inf, None, 0, False, None, str(e))

        best = polish if polish.fun <= simplex.fun else simplex
        iterations = int(simplex.nit) + int(polish.nit)
        if method == FitMethod.MLE:
            gradient_norm = float(np.max(np.abs(self._reduced_gradient(best.x, sample, anchor))))
            converged = gradient_norm < config.gradient_tolerance
        else:
            gradient_norm = None
            change = abs(simplex.fun - polish.fun) / max(abs(polish.fun), 1e-300)
            converged = bool(polish.success) or change < config.objective_tolerance
        self._logger.debug(f'Início {index}: objetivo={best.fun:.10g}, iterações={iterations}, convergiu={converged}')
        return _StartOutcome(index, float(best.fun), np.asarray(best.x), iterations, bool(converged), gradient_norm, str(polish.message))

    def _assemble(self, sample: UnitSample, method: FitMethod, best: _StartOutcome, anchor: float,
                  outcomes: List[_StartOutcome], config: OptimizerConfig) -> FitResult:
        params = self._params(best.xi, anchor)
        loglik = self.log_likelihood(sample, params)
        diagnostics = {
            'starts': len(outcomes),
            'converged_starts': sum(1 for o in outcomes if o.converged),
            'best_start': best.index,
            'message': best.message,
        }
        if method == FitMethod.MLE:
            objective = loglik
        else:
            objective, floored = self._mps_value(sample, params, config, validate=True)
            diagnostics['floored_spacings'] = floored
            if floored:
                self._logger.warning(f'{floored} espaçamento(s) nulo(s) no ajuste mps; há observações empatadas.')
        return FitResult.build(params=params, method=method, objective=objective, loglik=loglik, n=sample.n,
                               k=UBBS1_PARAMETERS, converged=best.converged, iterations=best.iterations,
                               gradient_norm=best.gradient_norm, diagnostics=diagnostics)

    # ------------------------------------------------------------------ referência Beta

    def fit_beta_baseline(self, sample: UnitSample, config: Optional[OptimizerConfig] = None) -> FitResult:
        """
        Ajuste da Beta(a, b) por máxima verossimilhança: Newton nas equações
        psi(a) - psi(a+b) = mean(log z) e psi(b) - psi(a+b) = mean(log(1-z)), a partir do método dos momentos.

        Raises:
            ErrorInsufficientData: Se n < 2.
            ErrorConvergence: Se Newton não convergir.
        """
        config = config or OptimizerConfig()
        if sample.n < 2:
            raise ErrorInsufficientData(f'O ajuste Beta exige n >= 2, recebido {sample.n}.', details={'n': sample.n})
        z = sample.values
        mean_log, mean_log1m = float(np.mean(np.log(z))), float(np.mean(np.log1p(-z)))
        m, var = float(np.mean(z)), float(np.var(z))
        common = m * (1.0 - m) / var - 1.0 if var > 0.0 else 1.0
        a, b = (m * common, (1.0 - m) * common) if common > 0.0 else (1.0, 1.0)

        score = self._beta_score(a, b, mean_log, mean_log1m)
        iterations = 0
        for iterations in range(1, config.beta_newton_maxiter + 1):
            trigamma_ab = special.polygamma(1, a + b)
            hessian = np.array([[special.polygamma(1, a) - trigamma_ab, -trigamma_ab],
                                [-trigamma_ab, special.polygamma(1, b) - trigamma_ab]])
            step = np.linalg.solve(hessian, score)
            factor = 1.0
            # Meio passo até manter (a, b) positivos.
            while a - factor * step[0] <= 0.0 or b - factor * step[1] <= 0.0:
                factor *= 0.5
            a, b = a - factor * step[0], b - factor * step[1]
            score = self._beta_score(a, b, mean_log, mean_log1m)
            if np.max(np.abs(score)) < 1e-12 or np.max(np.abs(factor * step)) < 1e-12 * max(a, b):
                break
        else:
            self._log_and_raise_warning(ErrorConvergence, 'O ajuste Beta não convergiu.', best_estimate=(a, b),
                                        details={'iterations': iterations, 'score': score.tolist()})

        loglik = math.fsum(stats.beta.logpdf(z, a, b))
        gradient_norm = float(np.max(np.abs(score))) * sample.n
        self._logger.info(f'Ajuste beta concluído: a={a:.6g}, b={b:.6g}, loglik={loglik:.6f}')
        return FitResult.build(params=BetaParams(a, b), method=FitMethod.BETA, objective=loglik, loglik=loglik, n=sample.n,
                               k=BETA_PARAMETERS, converged=True, iterations=iterations, gradient_norm=gradient_norm)

    @staticmethod
    def _beta_score(a: float, b: float, mean_log: float, mean_log1m: float) -> np.ndarray:
        digamma_ab = special.digamma(a + b)
        return np.array([special.digamma(a) - digamma_ab - mean_log, special.digamma(b) - digamma_ab - mean_log1m])
