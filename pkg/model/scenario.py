from config.sampling_config import SamplingConfig
from config.simulation_config import SimulationConfig
from dataclasses import dataclass, field
from exception.error_invalid_object import ErrorInvalidObject
from infrastructure.base_error import BaseError
from infrastructure.base_model import BaseModel
from model.fit_result import FitMethod
from model.ubbs1_params import Ubbs1Params
from typing import Any, Dict, Tuple

@dataclass(frozen=True)
class Scenario(BaseModel):
    """
    Um cenário de Monte Carlo: parâmetros verdadeiros, tamanho de amostra, réplicas, métodos e semente mestre.

    Atributos:
        true_params (Ubbs1Params): Parâmetros usados na geração.
        n (int): Tamanho de cada amostra (>= 6).
        replications (int): Número de réplicas (>= 1).
        methods (Tuple[FitMethod, ...]): Subconjunto de {mle, mps}.
        master_seed (int): Semente da qual derivam os fluxos das réplicas.
    """
    true_params: Ubbs1Params
    n: int
    master_seed: int
    replications: int = SimulationConfig.REPLICATIONS
    methods: Tuple[FitMethod, ...] = field(default=tuple(FitMethod(m) for m in SimulationConfig.METHODS))

    def __post_init__(self):
        try:
            methods = tuple(FitMethod(m) for m in self.methods)
        except ValueError as e:
            raise ErrorInvalidObject(f'Métodos inválidos no cenário: {list(self.methods)!r}.') from e
        if not methods or any(m not in (FitMethod.MLE, FitMethod.MPS) for m in methods):
            raise ErrorInvalidObject('O cenário exige métodos em {mle, mps}.')
        if int(self.n) != self.n or self.n < 6:
            raise ErrorInvalidObject(f'O cenário exige n >= 6, recebido {self.n!r}.')
        if int(self.replications) != self.replications or self.replications < 1:
            raise ErrorInvalidObject(f'O cenário exige replications >= 1, recebido {self.replications!r}.')
        object.__setattr__(self, 'methods', tuple(dict.fromkeys(methods)))
        object.__setattr__(self, 'n', int(self.n))
        object.__setattr__(self, 'replications', int(self.replications))
        object.__setattr__(self, 'master_seed', SamplingConfig.validate_seed(self.master_seed))

    def with_cell(self, n: int, rho: float) -> 'Scenario':
        """Cópia do cenário com outro tamanho de amostra e outra correlação."""
        return Scenario(true_params=self.true_params.replace(rho=rho), n=n, replications=self.replications,
                        methods=self.methods, master_seed=self.master_seed)

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> 'Scenario':
        """
        Constrói o cenário a partir da configuração JSON.

        `true_params` aceita a quíntupla "a1,a2,b1,b2,rho", uma lista de 5 números ou um objeto com
        as chaves alpha1..rho; na ausência, usa a verdade-base com rho = primeiro valor da grade.

        Raises:
            ErrorInvalidObject: Se a configuração estiver malformada.
        """
        if not isinstance(payload, dict):
            raise ErrorInvalidObject('A configuração da simulação deve ser um objeto JSON.')
        try:
            raw = payload.get('true_params')
            if raw is None:
                params = Ubbs1Params(*SimulationConfig.BASE_TRUTH, SimulationConfig.RHO_VALUES[0])
            elif isinstance(raw, str):
                params = Ubbs1Params.from_string(raw)
            elif isinstance(raw, dict):
                params = Ubbs1Params(**raw)
            else:
                params = Ubbs1Params.from_sequence(raw)
            return cls(true_params=params,
                       n=payload.get('n', SimulationConfig.N_VALUES[0]),
                       replications=payload.get('replications', SimulationConfig.REPLICATIONS),
                       methods=tuple(payload.get('methods', SimulationConfig.METHODS)),
                       master_seed=payload['master_seed'])
        except KeyError as e:
            raise ErrorInvalidObject(f'Campo obrigatório ausente na configuração: {e}.') from e
        except ErrorInvalidObject:
            raise
        except (BaseError, TypeError, ValueError) as e:
            raise ErrorInvalidObject(f'Configuração da simulação inválida: {e}') from e
