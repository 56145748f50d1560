"""Kernel backend selection.

The compiled extension (gammacone._ck) is used when importable; otherwise
the pure-Python twins take over.  GAMMA_CONE_BACKEND forces the choice:

    auto      compiled if available, else pure (default)
    compiled  require the extension, fail fast if missing
    pure      ignore the extension

ACTIVE_BACKEND reports what was selected.  Both backends implement the
same contracts; integer-valued kernels (Cheeger scan, canonical keys)
agree exactly, floating-point ones agree to rounding.
"""

from __future__ import annotations

import os

from . import _kernels_py

_choice = os.environ.get("GAMMA_CONE_BACKEND", "auto").strip().lower()
if _choice not in ("auto", "compiled", "pure"):
    raise ValueError(
        f"GAMMA_CONE_BACKEND={_choice!r}: expected 'auto', 'compiled', or 'pure'"
    )

_impl = _kernels_py
ACTIVE_BACKEND = "pure"
if _choice in ("auto", "compiled"):
    try:
        from . import _ck as _impl  # type: ignore[no-redef]

        ACTIVE_BACKEND = "compiled"
    except ImportError:
        if _choice == "compiled":
            raise ImportError(
                "GAMMA_CONE_BACKEND=compiled but gammacone._ck is not built; "
                "reinstall with a C compiler and Cython available"
            ) from None

jacobi_eigh = _impl.jacobi_eigh
cheeger_scan = _impl.cheeger_scan
canon_key = _impl.canon_key
