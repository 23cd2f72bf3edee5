from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("nsymm._core", ["src/nsymm/_core.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython: install pure-Python only; nsymm._backend falls back at import.
    extensions = []

setup(ext_modules=extensions)
