"""Backend selection for the compute kernels.

The compiled extension is preferred when available; set
``ORBITSPECTRA_BACKEND=python`` to force the pure fallback or
``ORBITSPECTRA_BACKEND=c`` to require the extension.
"""

import os

_choice = os.environ.get("ORBITSPECTRA_BACKEND", "auto").lower()

if _choice == "python":
    from orbitspectra import _pykernels as _impl
elif _choice == "c":
    from orbitspectra import _ckernels as _impl  # type: ignore[no-redef]
else:
    if _choice != "auto":
        raise ValueError(
            f"ORBITSPECTRA_BACKEND={_choice!r}: expected 'auto', 'python' or 'c'"
        )
    try:
        from orbitspectra import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        from orbitspectra import _pykernels as _impl

bfs_all_pairs = _impl.bfs_all_pairs
bareiss_echelon = _impl.bareiss_echelon
berkowitz_charpoly = _impl.berkowitz_charpoly


def backend_name():
    """Which kernel implementation is live: 'c' or 'python'."""
    return _impl.BACKEND
