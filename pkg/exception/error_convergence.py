from infrastructure.base_error import BaseError
from typing import Any, Dict, Optional

class ErrorConvergence(BaseError):
    """
    Exceção levantada quando um procedimento iterativo (quadratura adaptativa, busca de raiz,
    otimizador) esgota seu orçamento sem atingir a tolerância.

    Atributos:
        DEFAULT_MESSAGE (str): A mensagem padrão de erro usada quando não é fornecida uma mensagem personalizada.
        best_estimate (Any): Melhor estimativa obtida antes da interrupção.
    """
    DEFAULT_MESSAGE = "O procedimento numérico não convergiu."

    def __init__(self, message: str = None, best_estimate: Any = None, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, details)
        self.best_estimate = best_estimate
