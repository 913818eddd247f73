# Always prefer setuptools over distutils
# To use a consistent encoding
from codecs import open
import os
from os import path

from setuptools import setup

here = path.abspath(path.dirname(__file__))

with open(os.path.join(here, "pyequipart", "version"), encoding="utf-8") as v:
    current_version = v.read().rstrip()

# Get the long description from the README file
with open(path.join(here, "pyequipart", "readme.md"), encoding="utf-8") as f:
    long_description = f.read()

setup(
    name="pyequipart",
    version=current_version,
    description="Equipartitions of measures by hyperplanes: solvers, Gray-code combinatorics and mod 2 obstruction checks",  # Required
    long_description=long_description,
    long_description_content_type="text/markdown",
    python_requires=">=3.6",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Operating System :: POSIX :: Linux",
        "Operating System :: MacOS :: MacOS X",
        "Programming Language :: Python :: 3 :: Only",
    ],
    keywords="equipartition hyperplanes ham-sandwich gray-codes",
    packages=[
        "pyequipart",
        "pyequipart.arrangement",
        "pyequipart.charclass",
        "pyequipart.common",
        "pyequipart.curve",
        "pyequipart.graycode",
        "pyequipart.measures",
        "pyequipart.numpy",
        "pyequipart.solver",
        "pyequipart.test",
        "pyequipart.torch",
    ],
    package_data={
        "pyequipart": [
            "readme.md",
            "licence.txt",
            "version",
        ]
    },
    entry_points={
        "console_scripts": ["pyequipart = pyequipart.cli:main"],
    },
    install_requires=[
        "numpy",
        "scipy",
    ],
    extras_require={
        "full": [
            "sphinx",
            "sphinx_rtd_theme",
            "matplotlib",
            "torch",
        ],
    },
)
