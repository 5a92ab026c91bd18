from setuptools import setup, Extension

import numpy as np

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "litiquant._chain_kernel",
                ["src/litiquant/_chain_kernel.pyx"],
                include_dirs=[np.get_include()],
            )
        ],
        language_level=3,
    )
else:
    # Pure-python fallback kernel is selected at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
