from infrastructure.base_error import BaseError

class ErrorDomain(BaseError):
    """
    Exceção levantada quando um argumento está fora do domínio da função avaliada
    (por exemplo, x <= 0 na função de Bessel ou z fora de (0, 1) na densidade).

    Atributos:
        DEFAULT_MESSAGE (str): A mensagem padrão de erro usada quando não é fornecida uma mensagem personalizada.
    """
    DEFAULT_MESSAGE = "Argumento fora do domínio da função."
