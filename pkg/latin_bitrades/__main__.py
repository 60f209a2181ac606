"""
Main entry point for the Latin Bitrades toolkit.
"""

from latin_bitrades.cli.cli import main

if __name__ == "__main__":
    main()
