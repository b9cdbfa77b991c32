from exception.error_invalid_parameter import ErrorInvalidParameter
import logging
import os

class QuadratureConfig:
    """
    Configuração das rotinas de quadratura e das tolerâncias numéricas da distribuição.

    Os valores são atributos de classe; a ordem de Gauss-Hermite pode ser sobrescrita pela
    variável de ambiente `UBBS1_QUAD_ORDER`.

    Atributos da Classe:
        GAUSS_HERMITE_ORDER (int): Ordem padrão das integrais ponderadas por phi(w) (CDF e probabilidade de estresse-resistência).
        MIN_ORDER, MAX_ORDER (int): Faixa permitida para a ordem de Gauss-Hermite.
        CDF_CHECK_TOLERANCE (float): Concordância exigida entre as ordens m e 2m na CDF.
        ADAPTIVE_TOLERANCE (float): Tolerância absoluta padrão da quadratura adaptativa.
        ADAPTIVE_MAX_PANELS (int): Número máximo de subintervalos da quadratura adaptativa (`limit` de quad_vec).
        INNER_WIDTH (float): Meia-largura do intervalo em w usado quando a CDF recorre à quadratura adaptativa.
        MOMENT_TOLERANCE (float): Tolerância da integral externa dos momentos.
        MOMENT_EPSILON (float): Recorte das extremidades (0, 1) na integral dos momentos.
        RHO_CLAMP (float): Distância mínima de rho a +-1 em avaliações vindas do otimizador.
        MODALITY_STEP (float): Passo da diferença central de log_pdf na análise de modalidade.
        MODALITY_TOLERANCE (float): Tolerância em z do refinamento por bissecção dos pontos críticos.
        QUANTILE_TOLERANCE (float): Tolerância em |F(z) - q| da função quantil.
    """
    GAUSS_HERMITE_ORDER: int = 64
    MIN_ORDER: int = 2
    MAX_ORDER: int = 512
    CDF_CHECK_TOLERANCE: float = 1e-9
    ADAPTIVE_TOLERANCE: float = 1e-10
    ADAPTIVE_MAX_PANELS: int = 10_000
    INNER_WIDTH: float = 12.0
    MOMENT_TOLERANCE: float = 1e-9
    MOMENT_EPSILON: float = 1e-12
    RHO_CLAMP: float = 1e-10
    MODALITY_STEP: float = 1e-6
    MODALITY_TOLERANCE: float = 1e-9
    QUANTILE_TOLERANCE: float = 1e-10

    ENV_ORDER: str = 'UBBS1_QUAD_ORDER'

    _logger = logging.getLogger('QuadratureConfig')

    @classmethod
    def gauss_hermite_order(cls) -> int:
        """
        Retorna a ordem de Gauss-Hermite em vigor, considerando a variável de ambiente.

        Raises:
            ErrorInvalidParameter: Se o valor da variável não for um inteiro em [MIN_ORDER, MAX_ORDER].
        """
        raw = os.environ.get(cls.ENV_ORDER)
        if raw is None or raw.strip() == '':
            return cls.GAUSS_HERMITE_ORDER
        try:
            order = int(raw)
        except ValueError as e:
            raise ErrorInvalidParameter(f'{cls.ENV_ORDER} deve ser um inteiro, recebido "{raw}".') from e
        cls.validate_order(order)
        cls._logger.debug(f'Ordem de Gauss-Hermite definida pelo ambiente: {order}')
        return order

    @classmethod
    def validate_order(cls, order: int) -> int:
        """Valida uma ordem de Gauss-Hermite e a retorna."""
        if not cls.MIN_ORDER <= order <= cls.MAX_ORDER:
            raise ErrorInvalidParameter(f'Ordem de quadratura {order} fora de [{cls.MIN_ORDER}, {cls.MAX_ORDER}].')
        return order
