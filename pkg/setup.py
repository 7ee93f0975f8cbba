import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

import numpy as np


def extensions():
    if cythonize is None or os.environ.get("HYPERLAB_NO_EXT"):
        return []
    ext = Extension(
        "hyperlab._kernels",
        ["src/hyperlab/_kernels.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions())
