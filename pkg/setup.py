"""Build script: compiles the optional Cython kernel extension.

The extension is a speedup only; if Cython or a C compiler is missing the
install proceeds and the package falls back to the NumPy kernels at import.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that downgrades compiler failures to a warning."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - depends on toolchain
            warnings.warn(f"skipping compiled kernels ({exc}); "
                          "pure NumPy fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover
            warnings.warn(f"skipping {ext.name} ({exc}); "
                          "pure NumPy fallback will be used")


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("thetamin._fast", ["src/thetamin/_fast.pyx"],
                   extra_compile_args=["-O3"])],
        language_level=3,
    )
except ImportError:  # pragma: no cover
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
