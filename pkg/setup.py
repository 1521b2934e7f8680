"""Build script: compiles the optional C kernel extension.

The package is fully functional without the extension; _kernels falls back
to the pure-Python implementation if the build is unavailable.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "normtower._kernels._core",
                ["src/normtower/_kernels/_core.pyx"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
