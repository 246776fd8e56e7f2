from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("mthull._mindist", ["src/mthull/_mindist.pyx"])],
        language_level=3,
    )
except ImportError:
    # no Cython available; the package falls back to the numpy kernel
    pass

setup(ext_modules=ext_modules)
