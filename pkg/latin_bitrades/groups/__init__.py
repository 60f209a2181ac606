"""
Permutations, paratopisms and explicit paratopism groups.
"""

from latin_bitrades.groups.permutation import Permutation, RolePerm
from latin_bitrades.groups.paratopism import Paratopism, is_autoparatopism, parse_paratopism
from latin_bitrades.groups.paratopism_group import ParatopismGroup, closure, orbit, stab

__all__ = [
    "Permutation",
    "RolePerm",
    "Paratopism",
    "is_autoparatopism",
    "parse_paratopism",
    "ParatopismGroup",
    "closure",
    "orbit",
    "stab",
]
