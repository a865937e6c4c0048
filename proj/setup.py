import glob
import os
import shutil

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

here = os.path.dirname(os.path.abspath(__file__))

# bundle the reference fixtures as package data
pkg_data = os.path.join(here, "python", "raycheck", "data")
os.makedirs(pkg_data, exist_ok=True)
for f in glob.glob(os.path.join(here, "data", "*.json")):
    shutil.copy(f, pkg_data)

ext = Pybind11Extension(
    "raycheck._core",
    sources=sorted(glob.glob("src/*.cpp")) + ["python/bindings.cpp"],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(
    packages=["raycheck"],
    package_dir={"": "python"},
    package_data={"raycheck": ["data/*.json"]},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)
