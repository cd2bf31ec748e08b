"""Build script: compiles the optional C arithmetic kernel.

The package is fully functional without the extension; a pure-Python
kernel with identical behaviour is selected at import time when the
compiled module is unavailable.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError


class OptionalBuildExt(build_ext):
    """Build the extension if possible, fall back to pure Python if not."""

    def run(self):
        try:
            super().run()
        except (PlatformError, FileNotFoundError):
            self._warn()

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except (CCompilerError, ExecError, PlatformError, ValueError):
            self._warn()

    def _warn(self):
        print("WARNING: C kernel build failed; the pure-Python kernel "
              "will be used instead.")


def extensions():
    try:
        from Cython.Build import cythonize
        from setuptools.extension import Extension
    except ImportError:
        return []
    return cythonize(
        [Extension("exactframes._kernel.fastcore",
                   ["src/exactframes/_kernel/fastcore.pyx"])],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
