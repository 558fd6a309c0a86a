"""Builds the optional Cython kernels; the package falls back to pure Python without them."""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("NEGN_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("negn._ckernels", ["src/negn/_ckernels.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
