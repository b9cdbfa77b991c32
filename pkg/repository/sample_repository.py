from exception.error_insufficient_data import ErrorInsufficientData
from exception.error_invalid_object import ErrorInvalidObject
from infrastructure.base_repository import BaseRepository, Target
from model.unit_sample import UnitSample
from typing import List, NamedTuple

import numpy as np
import pandas as pd

SAMPLE_COLUMN = 'z'


class SampleLoad(NamedTuple):
    """Amostra lida e as linhas (1-based, contando o cabeçalho) descartadas por estarem fora de (0, 1)."""
    sample: UnitSample
    rejected_rows: List[int]


def _is_label(cell: str) -> bool:
    """Verdadeiro se a célula não é lida como número; "nan" e "inf" contam como valores, não como rótulos."""
    try:
        float(str(cell).strip())
    except ValueError:
        return True
    return False


class SampleRepository(BaseRepository):
    """
    Leitura e escrita de amostras unitárias em CSV de uma coluna e preparação de razões u = x/(x+y)
    a partir de CSV de duas colunas.
    """

    def load(self, path: str, column: str = SAMPLE_COLUMN) -> SampleLoad:
        """
        Lê um CSV de uma coluna numérica, com cabeçalho `z` (ou outro nome) ou sem cabeçalho.

        Linhas com valores não numéricos, ausentes ou infinitos tornam o arquivo inválido e são
        informadas pelo número da linha; valores finitos fora de (0, 1) são descartados e contados.

        Raises:
            ErrorInvalidObject: Se houver valores não numéricos ou não finitos, ou várias colunas sem `column`.
            ErrorInsufficientData: Se nenhuma linha válida restar.
        """
        raw = self._read_csv(path, header=None, dtype=str, skip_blank_lines=True, keep_default_na=False)
        has_header = all(_is_label(cell) for cell in raw.iloc[0])
        offset = 2 if has_header else 1
        if has_header:
            names = [str(name).strip() for name in raw.iloc[0]]
            raw = raw.iloc[1:].reset_index(drop=True)
            if column in names:
                series = raw.iloc[:, names.index(column)]
            elif len(names) == 1:
                series = raw.iloc[:, 0]
            else:
                raise ErrorInvalidObject(f'{path}: coluna "{column}" não encontrada entre {names}.')
        elif raw.shape[1] == 1:
            series = raw.iloc[:, 0]
        else:
            raise ErrorInvalidObject(f'{path}: esperado um CSV de uma coluna, encontradas {raw.shape[1]}.')

        values = pd.to_numeric(series.str.strip(), errors='coerce').to_numpy(dtype=float)
        bad = np.flatnonzero(~np.isfinite(values))
        if bad.size:
            rows = (bad + offset).tolist()
            self._logger.error(f'{path}: {bad.size} linha(s) com valor ausente, não numérico ou infinito: {rows[:20]}')
            raise ErrorInvalidObject(f'{path}: valores ausentes, não numéricos ou infinitos nas linhas {rows[:20]}.',
                                     details={'rows': rows})

        outside = np.flatnonzero((values <= 0.0) | (values >= 1.0))
        rejected = (outside + offset).tolist()
        if rejected:
            self._logger.warning(f'{path}: {len(rejected)} linha(s) fora de (0, 1) descartada(s): {rejected[:20]}')
        kept = np.delete(values, outside)
        if kept.size == 0:
            raise ErrorInsufficientData(f'{path}: nenhuma observação em (0, 1).', details={'rejected': len(rejected)})
        self._logger.info(f'{path}: {kept.size} observação(ões) lida(s)')
        return SampleLoad(UnitSample(values=kept, source=path), rejected)

    def prepare_ratio(self, path: str, x_column: str = 'x', y_column: str = 'y') -> SampleLoad:
        """
        Constrói u = x/(x+y) a partir de duas colunas de um CSV com cabeçalho.

        Linhas com valor ausente, não numérico ou negativo, soma nula ou razão fora de (0, 1) são
        removidas e contadas.

        Raises:
            ErrorInvalidObject: Se as colunas não existirem.
            ErrorInsufficientData: Se nenhuma linha válida restar.
        """
        frame = self._read_csv(path)
        missing = [name for name in (x_column, y_column) if name not in frame.columns]
        if missing:
            raise ErrorInvalidObject(f'{path}: coluna(s) ausente(s): {missing}; disponíveis: {list(frame.columns)}.')
        x = pd.to_numeric(frame[x_column], errors='coerce').to_numpy(dtype=float)
        y = pd.to_numeric(frame[y_column], errors='coerce').to_numpy(dtype=float)
        with np.errstate(divide='ignore', invalid='ignore'):
            u = x / (x + y)
        valid = np.isfinite(x) & np.isfinite(y) & (x >= 0.0) & (y >= 0.0) & np.isfinite(u) & (u > 0.0) & (u < 1.0)
        rejected = (np.flatnonzero(~valid) + 2).tolist()
        if rejected:
            self._logger.warning(f'{path}: {len(rejected)} linha(s) removida(s) na preparação da razão.')
        if not valid.any():
            raise ErrorInsufficientData(f'{path}: nenhuma linha válida para a razão {x_column}/({x_column}+{y_column}).',
                                        details={'rejected': len(rejected)})
        return SampleLoad(UnitSample(values=u[valid], source=f'{path}:{x_column}/({x_column}+{y_column})'), rejected)

    def save(self, sample: UnitSample, target: Target, header: bool = True) -> None:
        """Escreve a amostra como CSV com cabeçalho `z`, ou um valor por linha sem cabeçalho."""
        self._write_csv(pd.DataFrame({SAMPLE_COLUMN: sample.values}), target, header=header)
