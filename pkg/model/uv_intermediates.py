from dataclasses import dataclass
from infrastructure.base_model import BaseModel

@dataclass(frozen=True)
class UvIntermediates(BaseModel):
    """
    Grandezas intermediárias da densidade em um ponto z: s = 1/z - 1 e as formas quadráticas u_rho e v_rho.

    Ambas as formas são positivas para |rho| < 1; são avaliadas completando o quadrado.
    """
    s: float
    u_rho: float
    v_rho: float
