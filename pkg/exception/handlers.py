from exception.error_convergence import ErrorConvergence
from exception.error_domain import ErrorDomain
from exception.error_execution import ErrorExecution
from exception.error_insufficient_data import ErrorInsufficientData
from exception.error_invalid_object import ErrorInvalidObject
from exception.error_invalid_parameter import ErrorInvalidParameter
from exception.error_numerical_anomaly import ErrorNumericalAnomaly
from exception.error_unsupported_parameter import ErrorUnsupportedParameter
from flask import jsonify
from infrastructure.base_error import BaseError
from werkzeug.exceptions import HTTPException
import logging

class ErrorHandlerRegistry:
    """
    Classe responsável por registrar handlers de erro personalizados para a aplicação Flask.

    Cada exceção do domínio é convertida em uma resposta JSON `{"message": ...}` (mais `details`,
    quando houver) com o código HTTP correspondente: erros de entrada viram 400, dados
    insuficientes 422 e falhas numéricas ou de execução 500.
    """

    STATUS_CODES = {
        ErrorDomain: 400,
        ErrorInvalidParameter: 400,
        ErrorUnsupportedParameter: 400,
        ErrorInvalidObject: 400,
        ErrorInsufficientData: 422,
        ErrorConvergence: 500,
        ErrorNumericalAnomaly: 500,
        ErrorExecution: 500,
    }

    def __init__(self, app):
        """
        Inicializa o registrador de handlers de erro.

        Args:
            app (Flask): A instância da aplicação Flask onde os handlers de erro serão registrados.
        """
        self.app = app
        self._logger = logging.getLogger(self.__class__.__name__)
        self.register_error_handlers()

    def register_error_handlers(self):
        """
        Registra os handlers de erro na aplicação Flask.
        """
        self.app.errorhandler(HTTPException)(self.handle_http_error)
        self.app.errorhandler(Exception)(self.handle_generic_error)
        self.app.errorhandler(BaseError)(self.handle_domain_error)

    @staticmethod
    def create_error_response(payload, status_code):
        """
        Cria uma resposta de erro JSON padronizada.

        Retorna:
            Response: Resposta JSON com o status code informado.
        """
        response = jsonify(payload)
        response.status_code = status_code
        return response

    @classmethod
    def status_for(cls, error: BaseError) -> int:
        for error_class in type(error).__mro__:
            if error_class in cls.STATUS_CODES:
                return cls.STATUS_CODES[error_class]
        return 500

    def handle_domain_error(self, error: BaseError):
        """Manipula as exceções do domínio."""
        status = self.status_for(error)
        payload = {'message': error.message}
        if error.details:
            payload['details'] = _jsonable(error.details)
        return self.create_error_response(payload, status)

    def handle_http_error(self, error: HTTPException):
        """Mantém o código de erros HTTP do Flask (404, 405, ...), com corpo JSON."""
        return self.create_error_response({'message': error.description}, error.code)

    def handle_generic_error(self, error: Exception):
        """
        Manipula exceções genéricas não tratadas.

        Retorna:
            500 Internal Server Error com uma mensagem de erro padrão.
        """
        self._logger.error(f'Erro não tratado: {error}')
        return self.create_error_response({'message': 'Erro interno desconhecido.'}, 500)


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)
