# python setup.py build_ext --inplace
"""Build script for the optional compiled distance kernels.

The package is fully functional without the extension; ``hadacode.kernels``
falls back to a pure-Python implementation when the compiled module is
missing.  Any failure while building the extension is therefore demoted to
a warning instead of aborting the install.
"""

import warnings

from setuptools import Extension, setup


def _extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError as exc:
        warnings.warn(f"building without compiled kernels: {exc}")
        return []
    ext = Extension(
        "hadacode._kernels",
        sources=["src/hadacode/_kernels.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    try:
        return cythonize([ext], language_level=3)
    except Exception as exc:
        warnings.warn(f"building without compiled kernels: {exc}")
        return []


setup(ext_modules=_extensions())
