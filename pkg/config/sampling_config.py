from exception.error_invalid_parameter import ErrorInvalidParameter
from model.ratio_convention import RatioConvention

import numpy as np

class SamplingConfig:
    """
    Configuração do gerador de números aleatórios e da convenção da razão amostrada.

    Atributos da Classe:
        BIT_GENERATOR (str): Nome do gerador de bits do numpy; PCG64 admite fluxos independentes via SeedSequence.
        NORMAL_METHOD (str): Método das normais padrão (ziggurat, o método de `Generator.standard_normal`).
        RATIO_CONVENTION (RatioConvention): Convenção padrão da razão: Y/(X+Y) (`density`) ou X/(X+Y) (`algorithm`).
        MAX_SEED (int): Maior semente aceita (64 bits sem sinal).
    """
    BIT_GENERATOR: str = 'PCG64'
    NORMAL_METHOD: str = 'ziggurat'
    RATIO_CONVENTION: RatioConvention = RatioConvention.DENSITY
    MAX_SEED: int = 2 ** 64 - 1

    @classmethod
    def bit_generator(cls, seed_sequence: np.random.SeedSequence) -> np.random.BitGenerator:
        """Instancia o gerador de bits configurado a partir de uma SeedSequence."""
        factory = getattr(np.random, cls.BIT_GENERATOR, None)
        if factory is None:
            raise ErrorInvalidParameter(f'Gerador de bits desconhecido: {cls.BIT_GENERATOR}.')
        return factory(seed_sequence)

    @classmethod
    def validate_seed(cls, seed) -> int:
        try:
            value = int(seed)
        except (TypeError, ValueError) as e:
            raise ErrorInvalidParameter(f'Semente inválida: {seed!r}.') from e
        if value != seed or not 0 <= value <= cls.MAX_SEED:
            raise ErrorInvalidParameter(f'A semente deve ser um inteiro em [0, 2^64 - 1], recebido {seed!r}.')
        return value
