"""
Utility modules shared across the toolkit.
"""
