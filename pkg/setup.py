from setuptools import Extension, setup

# The compiled kernels are optional: without Cython (or a C compiler) the
# package falls back to the pure-Python kernels at import time.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("latdeg._kernels._fast", ["src/latdeg/_kernels/_fast.pyx"])],
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
