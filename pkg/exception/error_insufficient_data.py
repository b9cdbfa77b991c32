from infrastructure.base_error import BaseError

class ErrorInsufficientData(BaseError):
    """
    Exceção levantada quando a amostra tem menos observações do que a operação exige.

    Atributos:
        DEFAULT_MESSAGE (str): A mensagem padrão de erro usada quando não é fornecida uma mensagem personalizada.
    """
    DEFAULT_MESSAGE = "Dados insuficientes."
