import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the speedup extension if possible; the package works without it."""

    def run(self):
        try:
            super().run()
        except Exception:
            pass

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception:
            pass


ext_modules = []
if os.environ.get("K3FORGE_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "k3forge._speedups",
                    ["src/k3forge/_speedups.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
