import os

from setuptools import setup

# The compiled kernel is optional: the package falls back to the pure-Python
# implementation in logpadic._kernels_py when the extension is absent.
# Set LOGP_NO_EXT=1 to skip building it.
ext_modules = []
if os.environ.get("LOGP_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/logpadic/_kernels_cy.pyx"],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
