"""Build script: compiles the optional enumeration kernel extension.

The package works without the extension (a pure-Python twin is selected at
import time); building it just speeds up the Fincke-Pohst tree search.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/latrefl/_kernel_cy.pyx"],
        language_level=3,
    )
except Exception:
    pass

setup(ext_modules=ext_modules)
