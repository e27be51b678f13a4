from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("wordrep._ext", ["src/wordrep/_ext.pyx"])],
        language_level=3,
    )
except ImportError:  # pure-Python fallback kernels still work
    ext_modules = []

setup(ext_modules=ext_modules)
