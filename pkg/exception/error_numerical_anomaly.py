from infrastructure.base_error import BaseError

class ErrorNumericalAnomaly(BaseError):
    """
    Exceção levantada quando um resultado numérico contradiz uma propriedade estrutural conhecida
    (por exemplo, mais de 3 pontos críticos na densidade).

    Atributos:
        DEFAULT_MESSAGE (str): A mensagem padrão de erro usada quando não é fornecida uma mensagem personalizada.
    """
    DEFAULT_MESSAGE = "Anomalia numérica detectada."
