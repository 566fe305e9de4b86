"""Build script: compiles the optional fast kernel when Cython is present.

The package is fully functional without the extension; the compiled kernel
only accelerates the compressed engine.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("palstream._kernel", ["src/palstream/_kernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
