"""
Setup script for the fstype package.
"""

from setuptools import setup, find_packages

setup(
    name="fstype",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "tqdm>=4.65.0",
    ],
    entry_points={
        "console_scripts": [
            "fstype=fstype.cli.main:main",
        ],
    },
    description="Admissible monomial bases, characters and defining relations of W(L) for C_l^(1)",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.10",
)
