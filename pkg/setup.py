#!/usr/bin/env python3
"""
Setup script for the kspde experiment lab
"""

from pathlib import Path

from setuptools import find_packages, setup


def read_requirements():
    """Runtime requirements from requirements.txt (test tools excluded)."""
    lines = Path(__file__).with_name("requirements.txt").read_text(encoding="utf-8").splitlines()
    requirements = [line.strip() for line in lines if line.strip() and not line.startswith("#")]
    return [r for r in requirements if not r.startswith("pytest")]


setup(
    name="kspde",
    version="0.1.0",
    description="Numerical lab for degenerate parabolic-hyperbolic conservation laws with stochastic forcing",
    packages=find_packages(include=["kspde", "kspde.*"]),
    python_requires=">=3.9",
    install_requires=read_requirements(),
    extras_require={"test": ["pytest", "pytest-asyncio", "pytest-cov"]},
    entry_points={"console_scripts": ["kspde=kspde.harness.cli:main"]},
)
