"""Builds the optional compiled window-scan kernel.

The package is fully functional without the extension: the import-time
backend selection in posfact._backend falls back to the pure-Python twin.
Set POSFACT_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("POSFACT_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/posfact/_kernel.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
