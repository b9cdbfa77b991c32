from config.sampling_config import SamplingConfig
from exception.error_domain import ErrorDomain
from exception.error_invalid_parameter import ErrorInvalidParameter
from infrastructure.base_service import BaseService
from model.bs_params import BivBsParams, BsParams
from model.ratio_convention import RatioConvention
from model.rng_state import RngState
from model.ubbs1_params import Ubbs1Params
from model.unit_sample import UnitSample
from service.bivariate_bs_service import BivariateBsService
from typing import List, Optional, Union
import math

import numpy as np

ArrayLike = Union[float, np.ndarray]

# Limites do intervalo aberto (0, 1) para razões que arredondam para as extremidades.
_Z_MIN = np.finfo(float).tiny
_Z_MAX = np.nextafter(1.0, 0.0)


class SamplingService(BaseService):
    """
    Geração de amostras: normal bivariada por Cholesky, transformação normal -> BS e o gerador
    da razão UBBS1.

    Cada chamada consome o `RngState` recebido; a mesma semente reproduz a mesma sequência.
    """

    def __init__(self):
        super().__init__()
        self._bivariate = BivariateBsService()

    def rng(self, seed: int) -> RngState:
        """Cria o fluxo raiz para `seed`."""
        return RngState(seed)

    def split_streams(self, master_seed: int, count: int) -> List[RngState]:
        """
        Deriva `count` fluxos independentes de `master_seed`, um por unidade de trabalho.

        O fluxo i depende apenas de (master_seed, i), de modo que a ordem de execução não altera os resultados.
        """
        root = RngState(master_seed)
        return [root.spawn(index) for index in range(int(count))]

    def sample_bivariate_normal(self, n: int, rho: float, rng: RngState) -> np.ndarray:
        """
        Gera n pares normais padrão com correlação rho, como W·Q com Q = [[1, rho], [0, sqrt(1 - rho²)]].

        Returns:
            np.ndarray: Array (n, 2) com as colunas X1 e X2.

        Raises:
            ErrorDomain: Se n < 1.
            ErrorInvalidParameter: Se |rho| >= 1.
        """
        n = self._validate_count(n)
        rho = float(rho)
        if not -1.0 < rho < 1.0:
            raise ErrorInvalidParameter(f'rho deve estar em (-1, 1), recebido {rho!r}.')
        factor = np.array([[1.0, rho], [0.0, math.sqrt(1.0 - rho * rho)]])
        normals = rng.generator.standard_normal(size=(n, 2))
        return normals @ factor

    def normal_to_bs(self, x: ArrayLike, p: BsParams) -> ArrayLike:
        """
        T = a^{-1}(x; alpha, beta): leva uma normal padrão a uma BS(alpha, beta).

        Raises:
            ErrorDomain: Se algum x não for finito.
        """
        return self._bivariate.a_inverse(x, p)

    def sample_bivariate_bs(self, n: int, p: BivBsParams, rng: RngState) -> np.ndarray:
        """Gera n pares (T1, T2) da Birnbaum-Saunders bivariada."""
        normals = self.sample_bivariate_normal(n, p.rho, rng)
        return np.column_stack([self.normal_to_bs(normals[:, 0], p.x), self.normal_to_bs(normals[:, 1], p.y)])

    def sample_ubbs1(self, n: int, p: Ubbs1Params, rng: RngState, convention: Optional[RatioConvention] = None) -> UnitSample:
        """
        Gera n observações UBBS1 a partir de pares BS bivariados.

        Com a convenção `density` (padrão) retorna Z = T2/(T1+T2), cuja lei é a densidade
        f_Z(z; alpha1, alpha2, beta1, beta2, rho); com `algorithm` retorna T1/(T1+T2).

        Raises:
            ErrorDomain: Se n < 1.
        """
        convention = RatioConvention(convention or SamplingConfig.RATIO_CONVENTION)
        pairs = self.sample_bivariate_bs(n, p.bivariate(), rng)
        t1, t2 = pairs[:, 0], pairs[:, 1]
        ratio = t1 / t2 if convention == RatioConvention.DENSITY else t2 / t1
        z = np.clip(1.0 / (1.0 + ratio), _Z_MIN, _Z_MAX)
        source = f'ubbs1({p}) seed={rng.seed} stream={list(rng.stream)} convention={convention.value}'
        self._logger.debug(f'Amostra gerada: n={n}, {source}')
        return UnitSample(values=z, source=source)

    @staticmethod
    def _validate_count(n) -> int:
        if int(n) != n or n < 1:
            raise ErrorDomain(f'n deve ser um inteiro >= 1, recebido {n!r}.')
        return int(n)
