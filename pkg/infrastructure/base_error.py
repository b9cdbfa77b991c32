from typing import Any, Dict, Optional

class BaseError(Exception):
    """
    Classe base para as exceções do domínio UBBS1.

    Cada exceção concreta define uma mensagem padrão, que pode ser substituída por uma
    mensagem personalizada, e pode carregar um dicionário de detalhes numéricos
    (diagnósticos, melhor estimativa disponível, índices de linhas rejeitadas etc.).

    Atributos:
        DEFAULT_MESSAGE (str): A mensagem padrão usada quando nenhuma mensagem personalizada é fornecida.
        details (Dict[str, Any]): Informações adicionais sobre a falha.
    """

    DEFAULT_MESSAGE = "Ocorreu um erro."

    def __init__(self, message: str = None, details: Optional[Dict[str, Any]] = None):
        """
        Inicializa a exceção com uma mensagem personalizada ou com a mensagem padrão.

        Args:
            message (str, opcional): Mensagem personalizada para a exceção.
            details (Dict[str, Any], opcional): Diagnósticos associados ao erro.
        """
        self.message = message or self.DEFAULT_MESSAGE
        self.details = dict(details or {})
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Representação serializável do erro (mensagem e detalhes)."""
        payload: Dict[str, Any] = {'message': self.message}
        if self.details:
            payload['details'] = self.details
        return payload
