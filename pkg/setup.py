from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("groupdet._fastenum", ["src/groupdet/_fastenum.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Pure-Python install: the package falls back to the Python kernel.
    ext_modules = []

setup(ext_modules=ext_modules)
