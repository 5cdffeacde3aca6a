"""Hot loop of the completeness scan, compiled when possible.

``scan_slab`` is taken from the Cython extension ``_scan_ext`` if it was
built, otherwise from the NumPy implementation in ``_scan_py``.  Setting
``QUINTICGIT_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _scan_py

BACKEND = "python"
scan_slab = _scan_py.scan_slab

if os.environ.get("QUINTICGIT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _scan_ext
    except ImportError:  # extension not built
        _scan_ext = None
    else:
        BACKEND = "cython"
        scan_slab = _scan_ext.scan_slab

python_scan_slab = _scan_py.scan_slab


def available_backends():
    out = {"python": _scan_py.scan_slab}
    try:
        from . import _scan_ext as ext
    except ImportError:
        return out
    out["cython"] = ext.scan_slab
    return out
