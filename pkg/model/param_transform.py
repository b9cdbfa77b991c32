from config.numerics_config import QuadratureConfig
from model.ubbs1_params import Ubbs1Params
from typing import Tuple
import math

import numpy as np

class ParamTransform:
    """
    Reparametrização irrestrita de theta_rho: log para alpha1, alpha2, beta1, beta2 e atanh para rho.

    A lei de Z depende de beta1 e beta2 apenas pela razão beta2/beta1. O otimizador trabalha na
    forma reduzida xi = (log alpha1, log alpha2, log(beta2/beta1), atanh rho), com a média
    geométrica de (beta1, beta2) fixada por uma âncora.
    """

    @staticmethod
    def forward(p: Ubbs1Params) -> np.ndarray:
        a1, a2, b1, b2, rho = p.as_tuple()
        return np.array([math.log(a1), math.log(a2), math.log(b1), math.log(b2), math.atanh(rho)])

    @staticmethod
    def backward(eta) -> Ubbs1Params:
        """Inversa de `forward`; |rho| é mantido a pelo menos `RHO_CLAMP` de 1."""
        eta = np.asarray(eta, dtype=float)
        bound = 1.0 - QuadratureConfig.RHO_CLAMP
        rho = min(max(math.tanh(eta[4]), -bound), bound)
        return Ubbs1Params(math.exp(eta[0]), math.exp(eta[1]), math.exp(eta[2]), math.exp(eta[3]), rho)

    @staticmethod
    def jacobian_diagonal(p: Ubbs1Params) -> np.ndarray:
        """d theta / d eta: theta_k para as coordenadas em log e 1 - rho² para rho."""
        a1, a2, b1, b2, rho = p.as_tuple()
        return np.array([a1, a2, b1, b2, 1.0 - rho * rho])

    @staticmethod
    def reduce(eta) -> Tuple[np.ndarray, float]:
        """Separa eta em (xi, âncora log da média geométrica de beta1 e beta2)."""
        eta = np.asarray(eta, dtype=float)
        anchor = 0.5 * (eta[2] + eta[3])
        return np.array([eta[0], eta[1], eta[3] - eta[2], eta[4]]), anchor

    @staticmethod
    def expand(xi, anchor: float) -> np.ndarray:
        xi = np.asarray(xi, dtype=float)
        half = 0.5 * xi[2]
        return np.array([xi[0], xi[1], anchor - half, anchor + half, xi[3]])

    @staticmethod
    def reduce_gradient(grad_eta) -> np.ndarray:
        """Gradiente em xi a partir do gradiente em eta."""
        g = np.asarray(grad_eta, dtype=float)
        return np.array([g[0], g[1], 0.5 * (g[3] - g[2]), g[4]])
