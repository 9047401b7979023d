import os
import subprocess

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup


def eigen_include():
    override = os.environ.get("EIGEN3_INCLUDE_DIR")
    if override:
        return override
    try:
        flags = subprocess.run(
            ["pkg-config", "--cflags-only-I", "eigen3"],
            capture_output=True,
            text=True,
            check=True,
        ).stdout.split()
        if flags and flags[0].startswith("-I"):
            return flags[0][2:]
    except (OSError, subprocess.CalledProcessError):
        pass
    return "/usr/include/eigen3"


sources = sorted(
    ["python/bindings.cpp"]
    + [os.path.join("src", name) for name in os.listdir("src") if name.endswith(".cpp")]
)

setup(
    ext_modules=[
        Pybind11Extension(
            "agsim._core",
            sources,
            include_dirs=["include", "vendor", eigen_include()],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
