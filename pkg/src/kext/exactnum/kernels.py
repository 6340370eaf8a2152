"""Select the finite-field elimination backend at import time.

The compiled extension is preferred; setting ``KEXT_PURE_PYTHON=1`` in the
environment forces the numpy reference implementation.
"""
import os

from . import _kernels_py

if os.environ.get("KEXT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

rref_tables = _impl.rref_tables
rref_modp = _impl.rref_modp
matmul_tables = _impl.matmul_tables
matmul_modp = _impl.matmul_modp
