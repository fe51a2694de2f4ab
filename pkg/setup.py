from setuptools import setup, find_packages

setup(
    name="pepys-dice",
    version="1.0.0",
    description="Exact-arithmetic analysis of the Newton-Pepys dice problem",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    include_package_data=True,
    install_requires=[
        "click>=8.0.0",
        "rich>=13.0.0",
        "pyyaml>=6.0.0",
        "python-json-logger>=3.1.0",
        "cachetools>=5.3.0",
        "pandas>=2.0.0",
        "numpy>=1.26.0",
        "humanize>=4.9.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "pytest-cov>=4.0.0",
            "hypothesis>=6.90.0",
            "black>=23.0.0",
            "flake8>=6.0.0",
            "mypy>=1.0.0",
            "pre-commit>=3.0.0",
        ]
    },
    entry_points={
        "console_scripts": [
            "pepys-dice=cli.main:main",
        ],
    },
    python_requires=">=3.10",
)
