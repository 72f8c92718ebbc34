import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).parent.resolve()
        extdir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        build_temp = Path(self.build_temp).resolve()
        build_temp.mkdir(parents=True, exist_ok=True)

        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_temp),
                "-DSKBUILD=ON",
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_temp), "--target", "_core"],
            check=True,
        )
        # the _core install rule targets <prefix>/qhopf/
        subprocess.run(
            ["cmake", "--install", str(build_temp), "--prefix", str(extdir.parent)],
            check=True,
        )


setup(
    packages=["qhopf"],
    package_dir={"qhopf": "python/qhopf"},
    ext_modules=[CMakeExtension("qhopf._core")],
    cmdclass={"build_ext": CMakeBuild},
)
