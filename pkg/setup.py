from setuptools import setup, find_packages

__version__ = "0.1.0"

setup(
    name="bitml",
    version=__version__,
    description="Parse, verify and compile BitML contracts to standard Bitcoin \
                 transactions",
    license="MIT",
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "License :: OSI Approved :: MIT License",
        "Topic :: Software Development :: Compilers",
    ],
    keywords="bitcoin smart-contracts bitml model-checking ltl compiler",
    packages=find_packages(exclude=["tests"]),
    package_data={"bitml.benchmarks": ["*.bitml"]},
    zip_safe=False,
    platforms="any",
    python_requires=">=3.7",
    install_requires=[
        "marshmallow>=3.1.0,<4",
        "click>=7.0",
        "networkx>=2.4",
        "ecdsa>=0.15",
        "pycryptodome>=3.9",
    ],
    setup_requires=["pytest-runner"],
    tests_require=["pytest", "hypothesis"],
    extras_require={
        "dev": ["pytest", "hypothesis", "coverage", "pre-commit"],
        "docs": "sphinx",
    },
    entry_points={"console_scripts": ["bitml = bitml.cli:main"]},
)
