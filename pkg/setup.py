"""Build the optional Cython tau kernel; fall back silently if it cannot compile."""

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, Cython missing, ...
            print(f"warning: compiled tau kernel not built ({exc}); using pure Python")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); using pure Python")


def extensions():
    try:
        from Cython.Build import cythonize

        return cythonize(["src/hfplus/_tau_ext.pyx"], language_level=3, quiet=True)
    except Exception as exc:  # Cython missing or the source fails to translate
        print(f"warning: skipping compiled tau kernel ({exc})")
        return []


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
