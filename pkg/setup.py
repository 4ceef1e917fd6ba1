"""Builds the optional compiled iteration kernel.

The package works without it (pure-Python fallback in
neuromod._kernels_py); a failed compile is downgraded to a warning so
`pip install` never hard-fails on a missing toolchain.
"""

import warnings

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    # -ffp-contract=off: the fallback must stay bitwise-identical to the
    # compiled kernel, so no FMA contraction and no fast-math.
    ext_modules = cythonize(
        [
            Extension(
                "neuromod._kernels",
                ["src/neuromod/_kernels.pyx"],
                extra_compile_args=["-O2", "-ffp-contract=off"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - toolchain-dependent
    warnings.warn(f"compiled kernel skipped: {exc}")
    ext_modules = []

setup(ext_modules=ext_modules)
