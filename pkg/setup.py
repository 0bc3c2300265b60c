"""Build script.

The package is pure Python except for one optional Cython extension with
hot counting loops (k3fermat._kernels).  If Cython is unavailable, or the
extension fails to compile, the install proceeds without it and the
package falls back to the pure-Python kernels at import time.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.path.exists("src/k3fermat/_kernels.pyx"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("k3fermat._kernels", ["src/k3fermat/_kernels.pyx"])],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
