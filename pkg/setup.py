"""Build script for the optional compiled layout kernel.

The package works without the extension; `querycanvas.layout` falls back to
the numpy kernel when `_step_ext` is missing. Build in place with:

    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "querycanvas.layout._step_ext",
                ["src/querycanvas/layout/_step_ext.pyx"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
