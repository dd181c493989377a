import os

import numpy as np
from setuptools import Extension, setup

# Q1LAB_NO_EXT=1 builds a pure-Python install; the package then runs on _pykernels.
ext_modules = []
if not os.environ.get("Q1LAB_NO_EXT"):
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "q1lab._ckernels",
                ["src/q1lab/_ckernels.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
