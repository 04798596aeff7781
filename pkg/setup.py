import sys

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = []
if cythonize is not None and "--no-ext" not in sys.argv:
    extensions = cythonize(
        [Extension("tightpoly._ctable", ["src/tightpoly/_ctable.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
