"""Build the optional compiled enumeration core.

If Cython or a C compiler is missing the package still installs; the pure
Python backend is then used at import time.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("brauer_f4._enum_ext", ["src/brauer_f4/_enum_ext.pyx"])],
        compiler_directives={"language_level": 3},
        quiet=True,
    )
except ImportError:  # pragma: no cover - build without Cython
    pass

setup(ext_modules=ext_modules)
