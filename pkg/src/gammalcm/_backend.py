"""Kernel backend selection.

The compiled ``_core`` extension is used when it was built; otherwise the
pure-Python ``_pycore`` module.  Set ``GAMMALCM_PURE_PYTHON=1`` to force the
fallback.
"""

import os

if os.environ.get("GAMMALCM_PURE_PYTHON"):
    from . import _pycore as core
else:
    try:
        from . import _core as core
    except ImportError:
        from . import _pycore as core

BACKEND = "compiled" if core.__name__.endswith("._core") else "python"

__all__ = ["core", "BACKEND"]
