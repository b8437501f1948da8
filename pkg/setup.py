from setuptools import Extension, setup

# The compiled kernel is optional: if Cython (or a C compiler) is missing,
# the package falls back to src/kgonal/_kernels_py.py at import time.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "kgonal._kernels",
                ["src/kgonal/_kernels.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
