"""Kernel backend selection.

The compiled extension is used when it imports; otherwise (or when
``HYPERZFR_PURE=1``) the pure-Python module stands in. ``BACKEND`` names the
active one.
"""

import os

from . import _kernels_py

if os.environ.get("HYPERZFR_PURE", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _kernels_py
        BACKEND = "python"

gray_histogram = _impl.gray_histogram
independent_counts = _impl.independent_counts


def backends() -> dict:
    """All importable backends, keyed by name."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels
        out["cython"] = _kernels
    except ImportError:
        pass
    return out
