"""
Latin Bitrades
==============

Construction and verification of Latin bitrades from subgroups of the
autoparatopism group of a Latin square, together with the coset
construction over abstract groups and the finite-field families built
from Mersenne primes and quadratic orthomorphisms.
"""

__version__ = "0.1.0"
