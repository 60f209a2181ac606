"""
JSON Exporter Module

This module renders a bitrade as {"n": .., "t": [..], "t_mate": [..]}.
"""

from typing import Optional

from latin_bitrades.core.formats import bitrade_to_json
from latin_bitrades.core.partial_latin_square import Bitrade, PartialLatinSquare
from latin_bitrades.exporters.exporter_interface import BitradeExporter


class JsonExporter(BitradeExporter):
    """Bitrade JSON exporter."""

    def render(self, bitrade: Bitrade, square: Optional[PartialLatinSquare] = None) -> str:
        return bitrade_to_json(bitrade) + "\n"

    def get_format_name(self) -> str:
        return "json"
