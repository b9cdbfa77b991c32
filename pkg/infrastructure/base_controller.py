from exception.error_invalid_object import ErrorInvalidObject
from flask import Blueprint, request
from model.grid_spec import GridSpec
from model.ubbs1_params import Ubbs1Params
from model.unit_sample import UnitSample
from typing import Any, Callable, Dict, List, Tuple
import logging

Route = Tuple[str, str, Callable, List[str]]


class BaseController:
    """
    Classe base para os controladores da API HTTP.

    Cria o blueprint sob `{prefix}/{blueprint_name}`, registra as rotas declaradas pela subclasse
    em `routes()` e oferece a leitura padronizada dos argumentos comuns (parâmetros, grade e
    amostra). Erros de leitura levantam exceções do domínio, tratadas por `ErrorHandlerRegistry`.

    Atributos:
        blueprint (Blueprint): Um blueprint do Flask, responsável por agrupar as rotas da API.
    """

    _logger: logging.Logger

    def __init__(self, blueprint_name: str, prefix: str = '/api'):
        """
        Inicializa o controlador base e registra as rotas.

        Args:
            blueprint_name (str): Nome do blueprint Flask.
            prefix (str): Prefixo da URL para o conjunto de rotas. O padrão é '/api'.
        """
        self.blueprint: Blueprint = Blueprint(blueprint_name, __name__, url_prefix=f'{prefix}/{blueprint_name}')
        self._logger = logging.getLogger(self.__class__.__name__)
        self.register_routes()

    def routes(self) -> List[Route]:
        """Rotas da subclasse: (regra, endpoint, função, métodos)."""
        raise NotImplementedError

    def register_routes(self) -> None:
        for route, endpoint, view_func, methods in self.routes():
            self.blueprint.add_url_rule(route, endpoint, view_func, methods=methods)

    @staticmethod
    def json_body() -> Dict[str, Any]:
        data = request.get_json(silent=True)
        if not isinstance(data, dict):
            raise ErrorInvalidObject('O corpo da requisição deve ser um objeto JSON.')
        return data

    @staticmethod
    def params_from(source: Dict[str, Any]) -> Ubbs1Params:
        """Lê `params` como "a1,a2,b1,b2,rho" ou lista de 5 números."""
        raw = source.get('params')
        if raw is None:
            raise ErrorInvalidObject('O argumento "params" é obrigatório.')
        return Ubbs1Params.from_string(raw) if isinstance(raw, str) else Ubbs1Params.from_sequence(raw)

    @staticmethod
    def grid_from(source: Dict[str, Any]) -> GridSpec:
        raw = source.get('grid')
        if raw is None:
            raise ErrorInvalidObject('O argumento "grid" é obrigatório (start:stop:count).')
        return GridSpec.parse(raw)

    @staticmethod
    def sample_from(source: Dict[str, Any]) -> UnitSample:
        values = source.get('values')
        if not isinstance(values, list) or not values:
            raise ErrorInvalidObject('O campo "values" deve ser uma lista não vazia de números em (0, 1).')
        try:
            return UnitSample.of([float(v) for v in values], source='api')
        except (TypeError, ValueError) as e:
            raise ErrorInvalidObject('O campo "values" contém valores não numéricos.') from e
