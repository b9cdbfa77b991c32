from infrastructure.base_repository import BaseRepository, Target
from model.model_comparison import COMPARISON_COLUMNS, ModelComparison
from model.simulation_report import REPORT_COLUMNS, SimulationReport
from typing import Any, Dict, Iterable, List, Sequence

import pandas as pd

class ReportRepository(BaseRepository):
    """Escrita dos resultados: tabelas de avaliação, comparações, relatórios de simulação e documentos JSON."""

    def write_table(self, rows: Sequence[Dict[str, Any]], columns: Sequence[str], target: Target) -> None:
        """Escreve linhas como CSV com as colunas na ordem dada."""
        self._write_csv(pd.DataFrame(list(rows), columns=list(columns)), target)

    def write_values(self, x: Iterable[float], values: Iterable[float], target: Target, x_name: str = 'z') -> None:
        """Tabela de duas colunas `z,value`."""
        self._write_csv(pd.DataFrame({x_name: list(x), 'value': list(values)}), target)

    def write_comparison(self, comparison: ModelComparison, target: Target) -> None:
        self.write_table(comparison.table(), COMPARISON_COLUMNS, target)

    def write_simulation(self, reports: List[SimulationReport], target: Target) -> None:
        """CSV organizado `method,param,n,rho,rb,rmse,n_converged,n_failed`, uma linha por (célula, método, parâmetro)."""
        rows = [row for report in reports for row in report.rows()]
        self.write_table(rows, REPORT_COLUMNS, target)
        self._logger.info(f'Relatório de simulação com {len(rows)} linha(s) escrito')

    def write_document(self, payload: Dict[str, Any], target: Target) -> None:
        self._write_json(payload, target)
