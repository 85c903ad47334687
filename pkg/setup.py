from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("dlbackdoor._kernel", ["src/dlbackdoor/_kernel.pyx"])],
        language_level="3",
    )
except ImportError:
    # the package runs on the pure-Python kernel without the extension
    ext_modules = []

setup(ext_modules=ext_modules)
