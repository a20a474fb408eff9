"""Backend selection for the integer echelon kernels.

The compiled kernels are used when the extension built; setting
``LEFSCHETZ_PURE=1`` in the environment forces the interpreted fallback.
Both expose the same two functions with identical deterministic output.
"""

from __future__ import annotations

import os

from . import _pykern

if os.environ.get("LEFSCHETZ_PURE") == "1":
    _impl = _pykern
else:
    try:
        from . import _cykern as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykern

BACKEND = "python" if _impl is _pykern else "cython"

rref_int = _impl.rref_int
det_bareiss = _impl.det_bareiss


def available_backends() -> dict:
    """Importable kernel implementations keyed by name."""
    impls = {"python": _pykern}
    try:
        from . import _cykern

        impls["cython"] = _cykern
    except ImportError:
        pass
    return impls
