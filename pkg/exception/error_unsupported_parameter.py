from infrastructure.base_error import BaseError

class ErrorUnsupportedParameter(BaseError):
    """
    Exceção levantada quando os parâmetros são válidos, mas a operação não os suporta
    (por exemplo, a densidade da razão do tipo II com correlação não nula).

    Atributos:
        DEFAULT_MESSAGE (str): A mensagem padrão de erro usada quando não é fornecida uma mensagem personalizada.
    """
    DEFAULT_MESSAGE = "Parâmetro não suportado por esta operação."
