#!/usr/bin/env python
# -*- coding: utf-8 -*-
from setuptools import setup, find_packages
import sys

assert sys.version_info >= (3, 8, 0), "Python 3.8+ is required"
from pathlib import Path  # noqa E402

CURRENT_DIR = Path(__file__).parent

with open(CURRENT_DIR / "requirements.txt", encoding="utf8") as f:
    REQUIREMENTS = f.readlines()

with open(CURRENT_DIR / "requirements_dev.txt", encoding="utf8") as f:
    DEV_REQUIREMENTS = f.readlines()

VERSION = {}
exec((CURRENT_DIR / "berge_coloring" / "version.py").read_text(), VERSION)

setup(
    name="berge-coloring",
    version=VERSION["__version__"],
    description="Strong and weak colorings of hypergraphs without Berge copies "
    "of paths and trees",
    packages=find_packages(exclude=["tests", "*.tests", "*.tests.*"]),
    python_requires=">=3.8",
    install_requires=REQUIREMENTS,
    tests_require=DEV_REQUIREMENTS,
    entry_points={"console_scripts": ["berge-coloring=berge_coloring.cli:main"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
    ],
)
