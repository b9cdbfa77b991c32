from logging.handlers import RotatingFileHandler
from typing import Dict
import logging
import sys

class BaseLoggingConfig:
    """
    Classe base para configuração de logging.
    """
    LOG_FORMAT: str = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    LOG_LEVEL: int = logging.INFO

    # Handler instalado por cada subclasse; reconfigurar substitui o anterior.
    _installed: Dict[str, logging.Handler] = {}

    @classmethod
    def configure_logger(cls, handler: logging.Handler, level: int = None):
        """
        Configura um handler para o logger global com o formato e nível especificados.

        Args:
            handler (logging.Handler): O handler que será adicionado ao logger.
            level (int, optional): O nível de logging a ser configurado. Usa LOG_LEVEL por padrão.
        """
        root = logging.getLogger()
        previous = BaseLoggingConfig._installed.pop(cls.__name__, None)
        if previous is not None:
            root.removeHandler(previous)
            previous.close()
        handler.setFormatter(logging.Formatter(cls.LOG_FORMAT))
        handler.setLevel(level or cls.LOG_LEVEL)
        root.addHandler(handler)
        root.setLevel(min(level or cls.LOG_LEVEL, *(h.level for h in root.handlers)))
        BaseLoggingConfig._installed[cls.__name__] = handler


class ConsoleLoggingConfig(BaseLoggingConfig):
    """
    Configuração de logging para o console, sempre em stderr: stdout fica reservado à saída dos comandos.
    """
    @classmethod
    def setup_console_logging(cls, level: int = None):
        """Configura logging para o console."""
        console_handler = logging.StreamHandler(sys.stderr)
        cls.configure_logger(console_handler, level)
        logging.getLogger('ConsoleLoggingConfig').debug("Console logging configurado")


class FileLoggingConfig(BaseLoggingConfig):
    """
    Configuração de logging para arquivo com rotação de arquivos.
    """
    LOG_FILE_NAME: str = 'ubbs1.log'
    LOG_FILE_SIZE: int = 10 * 1024 * 1024  # 10 MB
    LOG_FILE_BACKUP: int = 5

    @classmethod
    def setup_file_logging(cls, path: str = None, level: int = logging.DEBUG):
        """Configura logging rotativo para arquivo."""
        file_handler = RotatingFileHandler(path or cls.LOG_FILE_NAME, maxBytes=cls.LOG_FILE_SIZE, backupCount=cls.LOG_FILE_BACKUP,
                                           encoding='utf-8')
        cls.configure_logger(file_handler, level=level)
        logging.getLogger('FileLoggingConfig').info(f"File logging configurado em {path or cls.LOG_FILE_NAME}")


def reset_logging():
    """Remove os handlers instalados pelas configurações acima."""
    root = logging.getLogger()
    for handler in BaseLoggingConfig._installed.values():
        root.removeHandler(handler)
        handler.close()
    BaseLoggingConfig._installed.clear()
