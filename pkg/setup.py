#!/usr/bin/env python

from setuptools import setup, find_packages

with open("README.rst", "r") as fh:
    long_description = fh.read()

with open('requirements.txt', 'r') as fp:
    install_requires = fp.read().splitlines()
install_requires = [i for i in install_requires if i and not i.startswith('#') and 'http' not in i]


setup(
    name="ordtile",
    version="0.1",
    author="ordtile contributors",
    author_email="",
    description="Tiling thresholds of vertex-ordered graphs with exact certificates",
    keywords="Ordered graphs, Graph tiling, Extremal combinatorics, Critical chromatic number",
    long_description=long_description,
    long_description_content_type="text/x-rst",
    install_requires=install_requires,
    license="BSD (3-clause)",
    entry_points={"console_scripts": ["ordtile=ordtile.cli.__main__:main"]},
    packages=find_packages(exclude=["tests", "tests.*"]),
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: BSD License",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.9',
)
