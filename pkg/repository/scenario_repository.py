from config.simulation_config import SimulationConfig
from exception.error_invalid_object import ErrorInvalidObject
from infrastructure.base_repository import BaseRepository
from model.scenario import Scenario
from typing import List, NamedTuple

class SimulationPlan(NamedTuple):
    """Cenário-base e a grade (n, rho) a percorrer."""
    base: Scenario
    n_values: List[int]
    rho_values: List[float]


class ScenarioRepository(BaseRepository):
    """Leitura da configuração JSON de um estudo de simulação."""

    def load(self, path: str) -> SimulationPlan:
        """
        Lê a configuração: os campos de `Scenario` mais as listas opcionais `n_values` e `rho_values`.

        Sem grade, o estudo tem uma única célula com o `n` e o rho de `true_params`.

        Raises:
            ErrorInvalidObject: Se o JSON ou seus campos forem inválidos.
        """
        payload = self._read_json(path)
        base = Scenario.from_dict(payload)
        try:
            n_values = [int(n) for n in payload.get('n_values', [base.n])]
            rho_values = [float(r) for r in payload.get('rho_values', [base.true_params.rho])]
        except (TypeError, ValueError) as e:
            raise ErrorInvalidObject(f'{path}: grade de simulação inválida: {e}') from e
        if not n_values or not rho_values:
            raise ErrorInvalidObject(f'{path}: n_values e rho_values não podem ser vazios.')
        self._logger.info(f'{path}: {len(n_values) * len(rho_values)} célula(s), {base.replications} réplica(s) cada')
        return SimulationPlan(base, n_values, rho_values)

    @staticmethod
    def default_grid(master_seed: int, replications: int = SimulationConfig.REPLICATIONS) -> SimulationPlan:
        """Plano padrão: verdade-base com a grade completa de n e rho."""
        base = Scenario.from_dict({'master_seed': master_seed, 'replications': replications})
        return SimulationPlan(base, list(SimulationConfig.N_VALUES), list(SimulationConfig.RHO_VALUES))
