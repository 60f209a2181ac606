"""
Worked examples rebuilt from their published generators.
"""
