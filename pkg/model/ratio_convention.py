from enum import Enum

class RatioConvention(str, Enum):
    """
    Qual variável ocupa o numerador da razão amostrada.

    `density`: Z = T2/(T1+T2), a variável cuja densidade é f_Z(z; alpha1, alpha2, beta1, beta2, rho).
    `algorithm`: Z = T1/(T1+T2), com o ramo (alpha1, beta1) no numerador; segue a lei refletida.
    """
    DENSITY = 'density'
    ALGORITHM = 'algorithm'
