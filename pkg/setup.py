import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("QGC_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "qgc._core",
                    sources=["src/qgc/_core.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # Pure-Python fallback in qgc.kernels takes over when the
        # compiled core is absent.
        ext_modules = []

setup(ext_modules=ext_modules)
