"""
Setup script for plethyx.
"""

from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="plethyx",
    version="0.1.0",
    description="Exact Schur decomposition of s_2[g] and s_11[g] for g = h_lambda, e_lambda",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=("examples", "examples.*")),
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
    install_requires=[
        "sympy>=1.9",
    ],
    extras_require={
        "dev": [
            "pytest",
        ],
    },
    entry_points={
        "console_scripts": [
            "plethyx=plethyx_cli.main:main",
        ],
    },
    include_package_data=True,
    package_data={
        "configs": ["suites/*.json"],
    },
)
