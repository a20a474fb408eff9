"""Build hook for the optional compiled row-reduction kernels.

The package is pure Python end to end; when Cython and a C toolchain are
present the hot elimination kernels are compiled as ``lefschetz._cykern``,
otherwise installation quietly falls back to the interpreted twin.
Set LEFSCHETZ_NO_EXT=1 to skip the extension on purpose.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("LEFSCHETZ_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/lefschetz/_cykern.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
