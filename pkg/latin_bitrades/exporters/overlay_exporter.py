"""
Overlay Exporter Module

This module renders a bitrade over its ambient square, "s/s'" in trade cells.
"""

from typing import Optional

from latin_bitrades.core.formats import format_overlay
from latin_bitrades.core.partial_latin_square import Bitrade, PartialLatinSquare
from latin_bitrades.exporters.exporter_interface import BitradeExporter


class OverlayExporter(BitradeExporter):
    """Overlay grid exporter."""

    def render(self, bitrade: Bitrade, square: Optional[PartialLatinSquare] = None) -> str:
        # Without a square only the trade cells are shown
        if square is None:
            square = PartialLatinSquare.empty(bitrade.order)
        return format_overlay(square, bitrade)

    def get_format_name(self) -> str:
        return "overlay"
