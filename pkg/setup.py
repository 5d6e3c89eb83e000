import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "cachesieve._kernels",
        ["src/cachesieve/_kernels.pyx"],
        extra_compile_args=["-O3"],
    )
]

# CACHESIEVE_PURE=1 skips the extension; the package then runs on the
# numpy fallback kernels selected at import.
if cythonize is not None and not os.environ.get("CACHESIEVE_PURE"):
    ext_modules = cythonize(extensions, compiler_directives={"language_level": "3"})
else:
    ext_modules = []

setup(ext_modules=ext_modules)
