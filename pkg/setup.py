"""Build script for the optional compiled eigensolver kernels.

The package works without the extension (a pure numpy fallback is selected
at import time), so a failed compile only costs speed, not functionality.
Force a pure-python install with CAVITYDRESS_NO_EXT=1.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("CAVITYDRESS_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "cavitydress._kernels",
                    ["src/cavitydress/_kernels.pyx"],
                    extra_compile_args=["-O3", "-ffp-contract=off"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
