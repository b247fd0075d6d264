from setuptools import setup, find_packages

setup(
    name="monoid_bench",
    version="0.1.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    install_requires=[
        "numpy>=1.24.0",
        "pandas>=2.0.0",
        "python-dotenv>=1.0.0",
        "pydantic>=2.6.0",
        "fastapi>=0.110.0",
        "uvicorn>=0.29.0",
        "lark>=1.1.0",
        "networkx>=3.0"
    ],
    entry_points={
        "console_scripts": [
            "monoid-bench=monoid_bench.cli:main",
        ],
    },
)
