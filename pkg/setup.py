"""Build script: compiles the Cython propagation kernel when Cython and a C
compiler are available.  The package works without it (pure-Python fallback
is selected at import time), so any build failure here is non-fatal.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "polyorbit._propagate_cy",
                ["src/polyorbit/_propagate_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
