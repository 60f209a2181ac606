"""
Finite group tables, the small group library and the coset construction.
"""
