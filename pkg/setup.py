"""Build script with an optional compiled kernel extension.

The package is pure Python plus one small Cython extension holding the hot
arithmetic kernels.  The extension is strictly optional: if Cython and a C
compiler are both missing, or the compile fails, the install falls back to
the pure-Python kernels and everything still works (slower).

Set SYLOW2_PURE=1 in the environment to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


PYX = os.path.join("src", "sylow2", "_ckernels.pyx")
C = os.path.join("src", "sylow2", "_ckernels.c")


def extension_modules():
    if os.environ.get("SYLOW2_PURE"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        # fall back to the pre-generated C file shipped with the source
        if os.path.exists(C):
            return [Extension("sylow2._ckernels", [C])]
        return []
    return cythonize([Extension("sylow2._ckernels", [PYX])], language_level="3")


class optional_build_ext(build_ext):
    """Tolerate a failing extension build; the package works without it."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            print(f"warning: compiled kernels skipped ({exc}); "
                  "using the pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); "
                  "using the pure-Python fallback")


setup(
    ext_modules=extension_modules(),
    cmdclass={"build_ext": optional_build_ext},
)
