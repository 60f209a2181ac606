"""
Output formats for bitrades.
"""
