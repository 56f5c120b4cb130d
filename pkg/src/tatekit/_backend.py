"""Selects the elimination core.

The compiled extension is preferred when it imported cleanly; setting
``TATEKIT_PURE=1`` forces the pure-Python core regardless.  Both cores
expose the same three functions with identical behaviour.
"""

import os

from . import _elim_py

if os.environ.get("TATEKIT_PURE"):
    _impl = _elim_py
else:
    try:
        from . import _elim_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _elim_py

BACKEND = "compiled" if _impl.__name__.endswith("_elim_cy") else "pure"

hermite = _impl.hermite
smith_diagonal = _impl.smith_diagonal
smith_transform = _impl.smith_transform
