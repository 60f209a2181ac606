from setuptools import setup, find_packages

setup(
    name="latin_bitrades",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    package_data={
        "latin_bitrades.catalogue": ["golden/*.txt"],
    },
    install_requires=[
        "pyyaml>=6.0",
        "click>=8.0.0",
        "pandas>=2.0.0",
        "pydantic>=2.0.0",
        "numpy>=1.24.0",
        "sympy>=1.12",
    ],
    extras_require={
        "test": [
            "pytest>=7.0.0",
            "hypothesis>=6.80.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "bitrade=latin_bitrades.cli.cli:main",
        ],
    },
    description="Latin bitrades from autoparatopism groups, coset constructions and finite-field families",
    keywords="latin squares, latin trades, bitrades, autoparatopism, combinatorics",
    python_requires=">=3.9",
)
