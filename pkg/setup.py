import os

import numpy as np
from setuptools import Extension, setup

extensions = []
if not os.environ.get("TEMPEXIT_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [
                Extension(
                    "tempexit._accel._kernels",
                    ["src/tempexit/_accel/_kernels.pyx"],
                    include_dirs=[np.get_include()],
                    extra_compile_args=["-O3"],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # pure-python install; the package falls back to the numpy kernels
        extensions = []

setup(ext_modules=extensions)
