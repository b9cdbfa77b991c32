from config.sampling_config import SamplingConfig
from dataclasses import dataclass, field
from infrastructure.base_model import BaseModel
from typing import Tuple

import numpy as np

@dataclass(eq=False)
class RngState(BaseModel):
    """
    Estado de um fluxo de números aleatórios determinístico.

    O fluxo é identificado pela semente e pela chave de derivação (`stream`); o mesmo par produz
    a mesma sequência em qualquer execução. Instâncias não devem ser compartilhadas entre threads:
    usuários paralelos derivam um fluxo por unidade de trabalho com `spawn`.

    Atributos:
        seed (int): Semente mestre de 64 bits.
        stream (Tuple[int, ...]): Chave de derivação do fluxo; vazia para o fluxo raiz.
    """
    seed: int
    stream: Tuple[int, ...] = ()
    _generator: np.random.Generator = field(init=False, repr=False)

    def __post_init__(self):
        self.seed = SamplingConfig.validate_seed(self.seed)
        self.stream = tuple(int(key) for key in self.stream)
        sequence = np.random.SeedSequence(self.seed, spawn_key=self.stream)
        self._generator = np.random.Generator(SamplingConfig.bit_generator(sequence))

    @property
    def generator(self) -> np.random.Generator:
        return self._generator

    def spawn(self, index: int) -> 'RngState':
        """Fluxo filho de índice `index`, derivado sem estado a partir da semente e da chave atual."""
        return RngState(self.seed, self.stream + (int(index),))
