import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("TATEKIT_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("tatekit._elim_cy", ["src/tatekit/_elim_cy.pyx"])],
            language_level="3",
        )
    except ImportError:
        # No Cython at build time: install the pure-Python core only.
        ext_modules = []

setup(ext_modules=ext_modules)
