from flask_cors import CORS
import logging
import os

class CORSConfig:
    """
    Classe responsável por configurar o CORS (Cross-Origin Resource Sharing) na API HTTP.

    As origens permitidas vêm da variável de ambiente `UBBS1_CORS_ORIGINS` (lista separada por
    vírgulas, padrão "*"), e o CORS é aplicado apenas às rotas sob /api.
    """
    ENV_ORIGINS: str = 'UBBS1_CORS_ORIGINS'
    RESOURCES_PATTERN: str = r"/api/*"

    @classmethod
    def origins(cls):
        raw = os.environ.get(cls.ENV_ORIGINS, '*').strip()
        if raw in ('', '*'):
            return '*'
        return [origin.strip() for origin in raw.split(',') if origin.strip()]

    @classmethod
    def init_cors(cls, app, origins=None):
        """
        Inicializa e configura o CORS para a aplicação Flask.

        Args:
            app (Flask): Instância da aplicação Flask onde o CORS será configurado.
            origins (str ou list): Origens permitidas; por padrão, as da variável de ambiente.
        """
        origins = origins or cls.origins()
        CORS(app, resources={cls.RESOURCES_PATTERN: {"origins": origins}})
        logging.getLogger("CORSConfig").info(f"CORS configurado com origins: {origins}")
