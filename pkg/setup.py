"""Optional compiled kernel build.

The package is pure Python; the one hot loop (truncated Cauchy convolution of
exact coefficient vectors) also ships as a Cython module.  If Cython or a C
compiler is unavailable, or the compilation fails for any reason, the build
proceeds without the extension and hopfmzv.series falls back to the pure
Python twin at import time.
"""

from setuptools import setup

ext_modules = []
cmdclass = {}

try:
    from Cython.Build import cythonize
    from setuptools.command.build_ext import build_ext

    class optional_build_ext(build_ext):
        """build_ext that downgrades every failure to a warning."""

        def run(self):
            try:
                super().run()
            except Exception as exc:  # compiler missing, broken, etc.
                self._warn(exc)

        def build_extension(self, ext):
            try:
                super().build_extension(ext)
            except Exception as exc:
                self._warn(exc)

        @staticmethod
        def _warn(exc):
            import warnings

            warnings.warn(
                "skipping optional compiled kernels (%s); "
                "falling back to the pure-Python implementation" % (exc,)
            )

    ext_modules = cythonize(
        ["src/hopfmzv/_kernels.pyx"], language_level="3"
    )
    cmdclass["build_ext"] = optional_build_ext
except ImportError:
    pass

setup(ext_modules=ext_modules, cmdclass=cmdclass)
