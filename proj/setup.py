import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name, sourcedir=""):
        super().__init__(name, sources=[])
        self.sourcedir = os.fspath(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        stage_dir = ext_path.parent
        stage_dir.mkdir(parents=True, exist_ok=True)

        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        cmake_args = [
            "-DCMAKE_BUILD_TYPE=Release",
            f"-DFORMSTAB_PYTHON_STAGE_DIR={stage_dir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DFORMSTAB_BUILD_CLI=OFF",
            "-DFORMSTAB_BUILD_TESTS=OFF",
            "-DFORMSTAB_BUILD_PYTHON=ON",
        ]
        subprocess.run(
            ["cmake", ext.sourcedir, *cmake_args], cwd=build_temp, check=True
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", "--parallel"],
            cwd=build_temp,
            check=True,
        )


setup(
    packages=["formstab"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("formstab._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
