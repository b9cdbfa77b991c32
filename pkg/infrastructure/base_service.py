from typing import Optional
import logging

class BaseService:
    """
    Classe base para os serviços numéricos.

    Centraliza o logger de cada serviço e o padrão de tratamento de erros: erros de domínio
    já tipados são registrados como advertência e propagados; falhas inesperadas são registradas
    como erro e encapsuladas em uma exceção do domínio, preservando a causa original.
    """
    _logger: logging.Logger

    def __init__(self):
        """
        Inicializa o serviço e configura o logger com o nome da classe concreta.
        """
        self._logger = logging.getLogger(self.__class__.__name__)

    def _log_and_raise_warning(self, error_class, message: str, exception: Optional[Exception] = None, **kwargs):
        """
        Loga uma advertência e lança uma exceção correspondente.

        Args:
            error_class (Exception): Classe da exceção a ser lançada.
            message (str): Mensagem de advertência a ser logada.
            exception (Optional[Exception]): Exceção original (opcional).
            **kwargs: Argumentos extras repassados ao construtor da exceção (por exemplo, `details`).
        """
        self._logger.warning(message)
        raise error_class(message, **kwargs) from exception

    def _log_and_raise_error(self, error_class, message: str, exception: Exception, **kwargs):
        """
        Loga um erro e lança uma exceção correspondente.

        Args:
            error_class (Exception): Classe da exceção a ser lançada.
            message (str): Mensagem de erro a ser logada.
            exception (Exception): Exceção original que causou o erro.
            **kwargs: Argumentos extras repassados ao construtor da exceção.
        """
        error_message = f'{message}: {exception}'
        self._logger.error(error_message)
        raise error_class(error_message, **kwargs) from exception
