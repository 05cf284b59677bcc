import os

from setuptools import Extension, setup

# The compiled kernels are an optional speedup; the package falls back to
# pure-Python kernels when the extension is absent or fails to build.
ext_modules = []
if os.environ.get("SESHADRI_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("seshadri._kernels", ["src/seshadri/_kernels.pyx"])],
            language_level=3,
        )

setup(ext_modules=ext_modules)
