from infrastructure.base_error import BaseError

class ErrorInvalidObject(BaseError):
    """
    Exceção levantada quando dados de entrada malformados são fornecidos
    (linhas de CSV, configuração JSON, especificação de grade).

    Atributos:
        DEFAULT_MESSAGE (str): A mensagem padrão de erro usada quando não é fornecida uma mensagem personalizada.
    """
    DEFAULT_MESSAGE = "Dados de entrada inválidos."
