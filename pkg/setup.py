"""Build script for the compiled graph kernels.

The package is fully functional without the extension (a pure NumPy
fallback is selected at import time), so a failed compile only costs
speed. `pip install -e . --no-build-isolation` is the intended path.
"""

import numpy as np
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Degrade to the pure-Python backend when no compiler is available."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # CompileError, DistutilsPlatformError, ...
            print(f"WARNING: compiled kernels skipped ({exc}); "
                  "falling back to pure NumPy backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"WARNING: building {ext.name} failed ({exc}); "
                  "falling back to pure NumPy backend")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "committee_select.kernels._ckern",
                ["src/committee_select/kernels/_ckern.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
