"""Build hook: compile the optional kernel extension when Cython is around.

The package is fully functional without it (pure-Python kernels are picked
up at import time), so any failure here just means the slow path.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("CERTIGRAPH_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/certigraph/_kernels/_speedups.pyx"],
            compiler_directives={"language_level": 3},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
