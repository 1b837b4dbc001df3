"""Build the optional compiled selection-scan kernel.

The package is fully functional without it (kernel.py falls back to the
pure-Python twin), so a failed extension build is downgraded to a warning.
"""

import warnings

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(["src/mapdelta/_scan.pyx"], language_level=3)
except Exception as exc:  # no Cython / no compiler: install pure-Python only
    warnings.warn("skipping compiled kernel: %s" % exc)
    ext_modules = []

setup(ext_modules=ext_modules)
