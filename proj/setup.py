"""Builds the C++ extension directly from the core sources.

The CMake build produces the CLI and tests; this shim exists so that
`pip install --no-build-isolation .` yields the python module without
requiring a CMake-aware build backend.
"""

from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "workbench._workbench",
    sorted(glob("src/*.cpp")) + ["bindings/py_module.cpp"],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
