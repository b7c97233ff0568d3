"""Build script for the optional compiled merge kernel.

The package is pure Python except for ``pointideal._merge_c``; if Cython or
a C compiler is unavailable the build falls back to the interpreted twin
and everything still works.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "pointideal._merge_c",
                sources=["src/pointideal/_merge_c.pyx"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
