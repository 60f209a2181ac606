"""
Exporter Interface Module

This module defines the abstract interface for bitrade output formats.
"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Optional, Union

from latin_bitrades.core.partial_latin_square import Bitrade, PartialLatinSquare
from latin_bitrades.utils.logger import get_logger

logger = get_logger(__name__)


class BitradeExporter(ABC):
    """Abstract interface for bitrade exporters."""

    @abstractmethod
    def render(self, bitrade: Bitrade, square: Optional[PartialLatinSquare] = None) -> str:
        """
        Render a bitrade as text.

        Args:
            bitrade: Bitrade to render
            square: Ambient square, used by formats that show it

        Returns:
            The rendered text
        """
        pass

    @abstractmethod
    def get_format_name(self) -> str:
        """
        Get the name of the format.

        Returns:
            Format name as used on the command line
        """
        pass

    def export(self, bitrade: Bitrade, path: Union[str, Path], square: Optional[PartialLatinSquare] = None) -> Path:
        """
        Write the rendered bitrade to a file.

        Args:
            bitrade: Bitrade to write
            path: Destination file
            square: Ambient square

        Returns:
            The path written
        """
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.render(bitrade, square))
        logger.info(f"Wrote {self.get_format_name()} bitrade of size {bitrade.size} to {path}")
        return path
