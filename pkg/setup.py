import numpy as np
from setuptools import setup
from setuptools.extension import Extension

# The compiled kernels are optional: if the toolchain is unavailable the
# package falls back to the pure-Python implementations at import time.
ext = Extension(
    "conceptnav._kernels._native",
    sources=["src/conceptnav/_kernels/_native.pyx"],
    include_dirs=[np.get_include()],
    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    extra_compile_args=["-O3"],
)
ext.optional = True

try:
    from Cython.Build import cythonize

    ext_modules = cythonize([ext], language_level=3)
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
