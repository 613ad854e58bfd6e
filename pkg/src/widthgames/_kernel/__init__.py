"""Kernel backend selection: compiled extension if built, else pure Python.

Set WIDTHGAMES_KERNEL=python or =cython to force a backend.
"""

import os

from . import kernel_py

_requested = os.environ.get("WIDTHGAMES_KERNEL", "").strip().lower()

if _requested == "python":
    _impl = kernel_py
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        if _requested == "cython":
            raise ImportError(
                "WIDTHGAMES_KERNEL=cython but the compiled kernel is not built"
            )
        _impl = kernel_py

BACKEND = "python" if _impl is kernel_py else "cython"

canonicalize = _impl.canonicalize
is_partition_of = _impl.is_partition_of
is_coarser = _impl.is_coarser
join = _impl.join
redirect = _impl.redirect
block_containing = _impl.block_containing
