import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "tropfano._tropfano",
    sorted(glob.glob("src/*.cpp", recursive=False)),
    include_dirs=["include", "vendor"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)
# the CLI entry point is not part of the extension
ext.sources = [s for s in ext.sources if not s.endswith("cli_main.cpp")]

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
