"""Build script: compiles the optional C speedups extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so any build failure here is
downgraded to a warning instead of aborting the install.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/rasmi/kernels/_speedups.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    sys.stderr.write(f"warning: skipping C extension build ({exc}); "
                     "falling back to pure-Python kernels\n")

setup(ext_modules=ext_modules)
