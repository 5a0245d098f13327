from setuptools import Extension, setup

# The compiled search kernel is optional: without Cython (or a C compiler)
# the package installs anyway and melim.search falls back to the pure-Python
# twin in melim._mecore_py.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("melim._mecore", ["src/melim/_mecore.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
