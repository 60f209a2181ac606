"""
Bitrade construction from autoparatopism groups.
"""
