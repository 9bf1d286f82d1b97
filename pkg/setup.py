"""Build hook: compile the optional Cython kernels, degrade to pure Python.

The package is fully functional without the extension; _kernels falls back
to _kernels_py when the compiled module is missing, so any build failure
here is reported as a warning rather than aborting the install.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "warning: compiled kernels skipped (%s); "
            "using the pure-Python backend" % exc,
            file=sys.stderr,
        )


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/modinvar/_kernels_cy.pyx"], language_level=3
    )
except Exception as exc:
    print(
        "warning: Cython unavailable (%s); using the pure-Python backend"
        % exc,
        file=sys.stderr,
    )

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
