"""
Exporter Factory Module

This module provides a factory for creating bitrade exporters by format name.
"""

from latin_bitrades.exporters.csv_exporter import CsvExporter
from latin_bitrades.exporters.exporter_interface import BitradeExporter
from latin_bitrades.exporters.json_exporter import JsonExporter
from latin_bitrades.exporters.overlay_exporter import OverlayExporter
from latin_bitrades.utils.logger import get_logger

logger = get_logger(__name__)


class ExporterFactory:
    """Factory for creating exporter instances."""

    @staticmethod
    def create_exporter(fmt: str) -> BitradeExporter:
        """
        Create an exporter for the given format.

        Args:
            fmt: One of "overlay", "json", "csv" (case-insensitive)

        Returns:
            An instance of a class implementing BitradeExporter

        Raises:
            ValueError: If the format is not supported
        """
        name = (fmt or "").lower()

        if name == "overlay":
            return OverlayExporter()
        elif name == "json":
            return JsonExporter()
        elif name == "csv":
            return CsvExporter()
        else:
            supported_formats = ["overlay", "json", "csv"]
            raise ValueError(f"Unsupported output format: {fmt}. Supported formats: {supported_formats}")
