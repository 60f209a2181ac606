"""
CSV Exporter Module

This module renders a bitrade as a table with one row per entry and the
columns component, row, col, sym.
"""

from typing import Optional

import pandas as pd

from latin_bitrades.core.partial_latin_square import Bitrade, PartialLatinSquare
from latin_bitrades.exporters.exporter_interface import BitradeExporter

CSV_COLUMNS = ["component", "row", "col", "sym"]


class CsvExporter(BitradeExporter):
    """CSV exporter backed by pandas."""

    def to_dataframe(self, bitrade: Bitrade) -> pd.DataFrame:
        records = [("T", *e) for e in bitrade.t.sorted_entries()]
        records += [("T'", *e) for e in bitrade.t_mate.sorted_entries()]
        return pd.DataFrame(records, columns=CSV_COLUMNS)

    def render(self, bitrade: Bitrade, square: Optional[PartialLatinSquare] = None) -> str:
        return self.to_dataframe(bitrade).to_csv(index=False)

    def get_format_name(self) -> str:
        return "csv"
