import sys

from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the pure
# Python implementation in widthgames._kernel.kernel_py at import time.
ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "widthgames._kernel._speedups",
                ["src/widthgames/_kernel/_speedups.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    print("Cython not available, building without the compiled kernel", file=sys.stderr)

setup(ext_modules=ext_modules)
