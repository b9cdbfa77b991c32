from exception.error_invalid_object import ErrorInvalidObject
from flask import jsonify, request
from infrastructure.base_controller import BaseController
from service.ubbs1_service import Ubbs1Service

class DistributionController(BaseController):
    """
    Rotas da distribuição UBBS1: tabulação de pdf, cdf e quantis em uma grade, momentos,
    estresse-resistência e modalidade.
    """
    def __init__(self):
        self.service = Ubbs1Service()
        super().__init__('distribution')

    def routes(self):
        return [
            ('/pdf', 'pdf', self.pdf, ['GET']),
            ('/cdf', 'cdf', self.cdf, ['GET']),
            ('/quantile', 'quantile', self.quantile, ['GET']),
            ('/moments', 'moments', self.moments, ['GET']),
            ('/stress', 'stress', self.stress, ['GET']),
            ('/modality', 'modality', self.modality, ['GET']),
        ]

    def _tabulate(self, function):
        params = self.params_from(request.args)
        grid = self.grid_from(request.args).points()
        self._logger.info(f'Tabulando {function.__name__} em {grid.size} ponto(s), theta=({params})')
        values = function(grid, params)
        return jsonify([{'z': float(z), 'value': float(v)} for z, v in zip(grid, values)]), 200

    def pdf(self):
        return self._tabulate(self.service.pdf)

    def cdf(self):
        return self._tabulate(self.service.cdf)

    def quantile(self):
        return self._tabulate(lambda grid, params: [self.service.quantile(q, params) for q in grid])

    def moments(self):
        params = self.params_from(request.args)
        try:
            orders = [int(item) for item in request.args.get('orders', '1,2,3,4').split(',')]
        except ValueError as e:
            raise ErrorInvalidObject('"orders" deve ser uma lista de inteiros separados por vírgula.') from e
        values = self.service.moments(orders, params)
        return jsonify([{'n': n, 'value': value} for n, value in zip(orders, values)]), 200

    def stress(self):
        params = self.params_from(request.args)
        return jsonify({'params': params.to_dict(), 'stress_strength': self.service.stress_strength(params)}), 200

    def modality(self):
        params = self.params_from(request.args)
        return jsonify(self.service.classify_modality(params).to_dict()), 200


distribution_blueprint = DistributionController().blueprint
