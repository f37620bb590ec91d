"""Build the optional compiled kernels.

If Cython or a C compiler is unavailable the package installs without
them and falls back to the pure-Python kernels at import.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "heapalg._ckernels",
                ["src/heapalg/_ckernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
