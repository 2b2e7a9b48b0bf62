# SPDX-License-Identifier: Apache-2.0
#
# relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
# Copyright (c) 2026 relaydmt contributors

"""CMake-driven extension build: compiles the C++ core and the pybind11
module through the project's CMakeLists, then drops the built _core library
where setuptools expects the extension."""

import os
import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        source_dir = Path(__file__).resolve().parent
        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        env = dict(os.environ, RELAYDMT_PIP_BUILD="1")
        configure = [
            "cmake",
            "-S",
            str(source_dir),
            "-B",
            str(build_dir),
            "-DCMAKE_BUILD_TYPE=Release",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        try:
            import pybind11

            configure.append(f"-Dpybind11_DIR={pybind11.get_cmake_dir()}")
        except ImportError:
            pass  # CMakeLists falls back to `python3 -m pybind11 --cmakedir`
        subprocess.run(configure, check=True, env=env)
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "relaydmt_pymod", "-j"],
            check=True,
            env=env,
        )

        built = sorted((build_dir / "python" / "relaydmt").glob("_core*"))
        if not built:
            raise RuntimeError("CMake build produced no _core extension")
        ext_path.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[0], ext_path)


setup(
    ext_modules=[CMakeExtension("relaydmt._core")],
    cmdclass={"build_ext": CMakeBuild},
)
