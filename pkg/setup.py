"""Build script: compiles the optional Cython kernel.

The package works without the extension (pure-Python kernel); the extension
is marked optional so a missing compiler degrades to the fallback instead of
failing the install. Set LFDYN_NO_EXT=1 to skip the build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("LFDYN_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "lfdyn._ckernel",
                    ["src/lfdyn/_ckernel.pyx"],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
