"""Build script: compiles the optional fast-kernel extension.

The package is fully functional without the extension (a pure-Python
implementation of the same kernels is selected at import time), so a
failed compile only costs speed, never correctness.
"""
from setuptools import setup
from setuptools.extension import Extension

ext_modules = []
try:
    from Cython.Build import cythonize

    ext = Extension(
        "orbitspectra._ckernels",
        sources=["src/orbitspectra/_ckernels.pyx"],
        extra_compile_args=["-O2"],
    )
    ext.optional = True  # compile failure downgrades to the pure backend
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})
except ImportError:
    pass

setup(ext_modules=ext_modules)
