from config.optimizer_config import OptimizerConfig
from exception.error_invalid_object import ErrorInvalidObject
from flask import jsonify
from infrastructure.base_controller import BaseController
from model.fit_result import FitMethod
from model.ubbs1_params import Ubbs1Params
from service.estimation_service import EstimationService
from service.model_selection_service import MODEL_NAMES, ModelSelectionService

class EstimationController(BaseController):
    """Ajuste, comparação de modelos e estatísticas descritivas de amostras enviadas no corpo JSON."""
    def __init__(self):
        self.service = EstimationService()
        self.selection = ModelSelectionService()
        super().__init__('estimation')

    def routes(self):
        return [
            ('/fit', 'fit', self.fit, ['POST']),
            ('/compare', 'compare', self.compare, ['POST']),
            ('/describe', 'describe', self.describe, ['POST']),
        ]

    def fit(self):
        data = self.json_body()
        sample = self.sample_from(data)
        try:
            method = FitMethod(data.get('method', 'mle'))
        except ValueError as e:
            raise ErrorInvalidObject(f'Método desconhecido: {data.get("method")!r}; use mle ou mps.') from e
        init = data.get('init')
        init = None if init is None else (Ubbs1Params.from_string(init) if isinstance(init, str) else Ubbs1Params.from_sequence(init))
        overrides = {}
        if data.get('beta_scale') is not None:
            try:
                overrides['beta_scale'] = float(data['beta_scale'])
            except (TypeError, ValueError) as e:
                raise ErrorInvalidObject(f'beta_scale deve ser numérico, recebido {data["beta_scale"]!r}.') from e
        result = self.service.fit(sample, method, init=init, config=OptimizerConfig.from_env(**overrides))
        return jsonify(result.to_flat_dict()), 200

    def compare(self):
        data = self.json_body()
        comparison = self.selection.compare(self.sample_from(data), data.get('models', list(MODEL_NAMES)))
        return jsonify(comparison.table()), 200

    def describe(self):
        data = self.json_body()
        return jsonify(self.selection.describe(self.sample_from(data)).to_dict()), 200


estimation_blueprint = EstimationController().blueprint
