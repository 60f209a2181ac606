"""
Tests package for Latin Bitrades.
"""
