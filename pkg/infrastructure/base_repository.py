from exception.error_execution import ErrorExecution
from exception.error_invalid_object import ErrorInvalidObject
from typing import Any, Dict, IO, Optional, Union
import json
import logging

import pandas as pd

Target = Union[str, IO[str]]


class BaseRepository:
    """
    Repositório base para a leitura e escrita de arquivos (CSV e JSON).

    Centraliza o logger e a tradução de falhas de E/S em exceções do domínio: arquivos
    malformados viram `ErrorInvalidObject` e falhas do sistema de arquivos viram `ErrorExecution`.
    Os destinos de escrita podem ser caminhos ou fluxos de texto já abertos (por exemplo, stdout).

    Attributes:
        _logger (logging.Logger): Logger para registrar informações e erros.
    """

    _logger: logging.Logger

    def __init__(self):
        """
        Inicializa o repositório e configura o logger.
        """
        self._logger = logging.getLogger(self.__class__.__name__)

    def _read_csv(self, path: str, **kwargs) -> pd.DataFrame:
        """
        Lê um CSV com pandas.

        Raises:
            ErrorInvalidObject: Se o arquivo estiver vazio ou não puder ser interpretado como CSV.
            ErrorExecution: Se o arquivo não puder ser lido.
        """
        try:
            return pd.read_csv(path, **kwargs)
        except pd.errors.EmptyDataError as e:
            self._logger.error(f'Arquivo vazio: {path}')
            raise ErrorInvalidObject(f'O arquivo {path} está vazio.') from e
        except pd.errors.ParserError as e:
            self._logger.error(f'Erro ao interpretar {path}: {e}')
            raise ErrorInvalidObject(f'O arquivo {path} não é um CSV válido: {e}') from e
        except OSError as e:
            self._logger.error(f'Erro ao ler {path}: {e}')
            raise ErrorExecution(f'Não foi possível ler {path}: {e}') from e

    def _write_csv(self, frame: pd.DataFrame, target: Target, header: bool = True) -> None:
        """
        Escreve um DataFrame em CSV, sem índice e com 17 dígitos significativos.

        Raises:
            ErrorExecution: Se o destino não puder ser escrito.
        """
        try:
            frame.to_csv(target, index=False, header=header, float_format='%.17g', lineterminator='\n')
        except OSError as e:
            self._logger.error(f'Erro ao escrever CSV: {e}')
            raise ErrorExecution(f'Não foi possível escrever o CSV: {e}') from e

    def _read_json(self, path: str) -> Any:
        """
        Raises:
            ErrorInvalidObject: Se o conteúdo não for JSON válido.
            ErrorExecution: Se o arquivo não puder ser lido.
        """
        try:
            with open(path, encoding='utf-8') as handle:
                return json.load(handle)
        except json.JSONDecodeError as e:
            self._logger.error(f'JSON inválido em {path}: {e}')
            raise ErrorInvalidObject(f'O arquivo {path} não contém JSON válido: {e}') from e
        except OSError as e:
            self._logger.error(f'Erro ao ler {path}: {e}')
            raise ErrorExecution(f'Não foi possível ler {path}: {e}') from e

    def _write_json(self, payload: Dict[str, Any], target: Target, indent: Optional[int] = 2) -> None:
        """Escreve `payload` como JSON; valores não finitos devem ter sido convertidos em None antes."""
        text = json.dumps(payload, indent=indent, ensure_ascii=False) + '\n'
        try:
            if isinstance(target, str):
                with open(target, 'w', encoding='utf-8') as handle:
                    handle.write(text)
            else:
                target.write(text)
        except OSError as e:
            self._logger.error(f'Erro ao escrever JSON: {e}')
            raise ErrorExecution(f'Não foi possível escrever o JSON: {e}') from e
