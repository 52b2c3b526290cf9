"""Build script: compiles the optional Cython sequence kernel.

The package is pure Python by default; if Cython and a C compiler are
available, the hot degree-sequence kernel is compiled and picked up at
import time. A failed extension build falls back to the pure kernel.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("UNIGRAPH_SKIP_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "unigraph._kernel._ckernel",
                    ["src/unigraph/_kernel/_ckernel.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
