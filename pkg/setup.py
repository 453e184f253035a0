"""Build script for the optional compiled refinement kernel.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so a missing compiler must not
break installation.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible, otherwise install pure-Python only."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing toolchain
            print(f"warning: skipping compiled kernel ({exc}); "
                  "using the pure-Python refinement backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not compile {ext.name} ({exc}); "
                  "using the pure-Python refinement backend")


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("tokenaut._refinecore", ["src/tokenaut/_refinecore.pyx"])],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
        },
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
