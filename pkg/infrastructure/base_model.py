from dataclasses import fields, is_dataclass
from enum import Enum
from typing import Any, Dict, Optional, Set
import logging
import math

import numpy as np

class BaseModel:
    """
    Classe base para os tipos de domínio (parâmetros, amostras, resultados de ajuste e relatórios).

    Fornece a conversão de instâncias em dicionários serializáveis em JSON. As subclasses são
    dataclasses; os campos são percorridos na ordem de declaração, e valores numpy, enums e
    objetos aninhados são convertidos recursivamente.

    Atributos:
        _logger (logging.Logger): Logger para registrar erros durante a conversão.
    """
    _logger: logging.Logger = logging.getLogger(__name__)

    def to_dict(self, visited: Optional[Set[int]] = None, max_depth: int = 5, current_depth: int = 0) -> Optional[Dict[str, Any]]:
        """
        Converte o objeto em um dicionário.

        Args:
            visited (Optional[Set[int]]): Conjunto de objetos já visitados para evitar loops infinitos.
            max_depth (int): Profundidade máxima de aninhamento.
            current_depth (int): Profundidade atual de aninhamento.

        Returns:
            Optional[Dict[str, Any]]: Um dicionário representando o objeto ou None se a profundidade máxima for excedida.
        """
        if visited is None:
            visited = set()
        if current_depth > max_depth or id(self) in visited:
            return None

        visited.add(id(self))
        try:
            return {key: self._serialize_value(getattr(self, key), visited, max_depth, current_depth + 1) for key in self._public_fields()}
        except Exception as e:
            self._logger.error(f'Erro ao converter o objeto para dicionário: {e}')
            raise

    def _public_fields(self):
        """Nomes dos campos serializados: campos da dataclass que não começam com '_'."""
        if is_dataclass(self):
            return [f.name for f in fields(self) if not f.name.startswith('_')]
        return [key for key in vars(self) if not key.startswith('_')]

    def _serialize_value(self, value, visited, max_depth, current_depth):
        """
        Serializa valores individuais, incluindo listas, tuplas, dicionários, arrays numpy e enums.

        Valores de ponto flutuante não finitos viram None, pois JSON não os representa.
        """
        if current_depth > max_depth:
            return None
        if isinstance(value, Enum):
            return value.value
        if isinstance(value, (bool, np.bool_)):
            return bool(value)
        if isinstance(value, (int, np.integer)):
            return int(value)
        if isinstance(value, (float, np.floating)):
            value = float(value)
            return value if math.isfinite(value) else None
        if isinstance(value, (str, type(None))):
            return value
        if isinstance(value, np.ndarray):
            value = value.tolist()
        if isinstance(value, (list, tuple)):
            return [self._serialize_value(item, visited, max_depth, current_depth + 1) for item in value]
        if isinstance(value, dict):
            return {str(k): self._serialize_value(v, visited, max_depth, current_depth + 1) for k, v in value.items()}
        if hasattr(value, 'to_dict'):
            return value.to_dict(visited, max_depth, current_depth + 1)
        return None
