"""
Command-line interface for the Latin bitrades toolkit.
"""
