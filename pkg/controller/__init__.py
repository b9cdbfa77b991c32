from controller.distribution_controller import distribution_blueprint
from controller.estimation_controller import estimation_blueprint
from controller.sampling_controller import sampling_blueprint

def register_blueprints(app):
    """
    Registra os blueprints das rotas no aplicativo Flask.

    Blueprints Registrados:
        - distribution_blueprint: pdf, cdf, quantis, momentos, estresse-resistência e modalidade.
        - sampling_blueprint: geração de amostras.
        - estimation_blueprint: ajuste, comparação de modelos e estatísticas descritivas.
    """
    for blueprint in (distribution_blueprint, sampling_blueprint, estimation_blueprint):
        app.register_blueprint(blueprint)
