import os

from setuptools import setup

# The compiled kernel is optional: without Cython (or with SELJAC_PURE=1)
# the package installs anyway and falls back to the pure-Python kernels.
ext_modules = []
if os.environ.get("SELJAC_PURE") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "seljac._speedups",
                    ["src/seljac/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
