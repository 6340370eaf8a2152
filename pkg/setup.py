"""Build script for the optional compiled kernels.

The Cython extension is an accelerator only.  When Cython or a C compiler is
missing the package still installs and falls back to the numpy kernels.
"""
import os

from setuptools import Extension, setup


def _extensions():
    if os.environ.get("KEXT_NO_EXT"):
        return []
    try:
        import numpy as np
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "kext.exactnum._kernels",
        ["src/kext/exactnum/_kernels.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"}, quiet=True)


setup(ext_modules=_extensions())
