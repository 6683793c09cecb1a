"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (pure fallback); any build failure
is therefore non-fatal.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/coclass/_kernels/_fast.pyx",
        language_level=3,
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
