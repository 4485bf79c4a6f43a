"""Build the optional compiled quadrature kernel.

The package works without it: ``ngqm.kernels`` falls back to the pure-Python
implementation when ``ngqm._kernels`` cannot be imported.  Set
``NGQM_NO_EXT=1`` to skip the extension at build time.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("NGQM_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:  # pragma: no cover - build without Cython
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "ngqm._kernels",
                    ["src/ngqm/_kernels.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )

setup(ext_modules=ext_modules)
