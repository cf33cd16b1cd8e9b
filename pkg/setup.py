"""Build script: compiles the gate kernels when Cython is available.

The package installs and runs without the extension; ``qsar.kernels``
falls back to the NumPy implementation at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:
    pass
else:
    ext_modules = cythonize(
        [Extension("qsar.kernels._ckernels", ["src/qsar/kernels/_ckernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
