"""Backend dispatch for the iteration kernels.

Prefers the compiled extension; falls back to the pure-Python mirror.
Set NEUROMOD_PURE_PYTHON=1 to force the fallback. BACKEND says which one
is live; both produce bitwise-identical arrays.
"""

import os

if os.environ.get("NEUROMOD_PURE_PYTHON"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

orbit_single = _impl.orbit_single
orbit_two = _impl.orbit_two
scan_single = _impl.scan_single
scan_two = _impl.scan_two
