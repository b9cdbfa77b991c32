from infrastructure.base_error import BaseError

class ErrorInvalidParameter(BaseError):
    """
    Exceção levantada quando um vetor de parâmetros (ou valor de configuração) viola suas restrições.

    Atributos:
        DEFAULT_MESSAGE (str): A mensagem padrão de erro usada quando não é fornecida uma mensagem personalizada.
    """
    DEFAULT_MESSAGE = "Parâmetro inválido."
