"""Build script: compiles the optional exact-rank extension when Cython is available.

The package is fully functional without the extension; lsbound._core falls
back to the pure-Python kernel at import time.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/lsbound/_core/rank_cy.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # Cython missing or no C compiler: install pure-Python only
    print(f"lsbound: skipping compiled rank kernel ({exc!r})")

setup(ext_modules=ext_modules)
