from config.sampling_config import SamplingConfig
from exception.error_invalid_object import ErrorInvalidObject
from flask import jsonify
from infrastructure.base_controller import BaseController
from model.ratio_convention import RatioConvention
from service.sampling_service import SamplingService

class SamplingController(BaseController):
    """Geração de amostras UBBS1 com semente explícita."""
    def __init__(self):
        self.service = SamplingService()
        super().__init__('sampling')

    def routes(self):
        return [('/sample', 'sample', self.sample, ['POST'])]

    def sample(self):
        data = self.json_body()
        params = self.params_from(data)
        if 'seed' not in data or 'n' not in data:
            raise ErrorInvalidObject('Os campos "n" e "seed" são obrigatórios.')
        try:
            convention = RatioConvention(data.get('convention', SamplingConfig.RATIO_CONVENTION.value))
        except ValueError as e:
            raise ErrorInvalidObject(f'Convenção desconhecida: {data.get("convention")!r}.') from e
        rng = self.service.rng(data['seed'])
        sample = self.service.sample_ubbs1(data['n'], params, rng, convention)
        self._logger.info(f'Amostra de tamanho {sample.n} gerada (semente {rng.seed})')
        return jsonify(sample.to_dict()), 200


sampling_blueprint = SamplingController().blueprint
