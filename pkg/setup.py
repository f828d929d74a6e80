"""Build script: compiles the optional GF(p) elimination kernel.

The package is pure Python apart from ``hochcat._gfcore``, a small Cython
extension for dense row reduction mod p.  If Cython or a C compiler is
missing the build falls through and the pure-Python kernel is used instead
(selected at import time in ``hochcat.kernels``).
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("hochcat._gfcore", ["src/hochcat/_gfcore.pyx"])],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
