"""Builds the optional refinement extension.

The package works without a compiler: if Cython or the C toolchain is
unavailable the build proceeds without the extension and the pure-Python
refinement backend is selected at import time.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/pcodes/_refine_c.pyx"],
        language_level="3",
        compiler_directives={"boundscheck": False, "wraparound": False},
    )
except Exception as exc:  # pragma: no cover - depends on the build host
    print(f"pcodes: building without the compiled refinement kernel ({exc})",
          file=sys.stderr)

setup(ext_modules=ext_modules)
