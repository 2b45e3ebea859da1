import numpy as np
from setuptools import Extension, setup

# The compiled kernels are an optional speedup: if the extension fails to
# build, the package falls back to the numpy implementation at import time.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "vaxnet.milp._kernels",
                ["src/vaxnet/milp/_kernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

for ext in extensions:
    ext.optional = True

setup(ext_modules=extensions)
