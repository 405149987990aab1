"""Build script for the optional compiled kernels.

The package works without the extension (a pure-Python fallback is selected
at import time); building it makes the census sweeps roughly two orders of
magnitude faster.  Set BRAIDZEL_SKIP_EXT=1 to force a pure-Python install.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("BRAIDZEL_SKIP_EXT"):
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/braidzel/_speedups.pyx"],
        language_level=3,
    )

setup(ext_modules=ext_modules)
