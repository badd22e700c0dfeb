"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension: orthocert.kernels
falls back to the portable implementations when the import fails.  The
extension is skipped (with a warning) when Cython or a C compiler is
unavailable, so `pip install` never hard-fails on the compile step.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that degrades to a warning when compilation fails."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"orthocert: skipping compiled kernels ({exc!r}); "
            "the pure backend will be used",
            file=sys.stderr,
        )


try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "orthocert._kernels",
                ["src/orthocert/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
