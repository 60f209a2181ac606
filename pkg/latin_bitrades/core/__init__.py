"""
Core partial Latin square types, definitional verifiers and trade searches.
"""

from latin_bitrades.core.partial_latin_square import Entry, PartialLatinSquare, Bitrade, EMPTY

__all__ = ["Entry", "PartialLatinSquare", "Bitrade", "EMPTY"]
