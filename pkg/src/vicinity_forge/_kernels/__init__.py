"""Backend selection for the decode hot loop.

The compiled extension is used when it was built; otherwise (or when
``VFORGE_PURE_PYTHON`` is set to a non-``0`` value) the numpy fallback is
selected.  Both expose the same ``argmax_dot`` contract and identical tie
semantics.  ``BACKEND`` names the active implementation.
"""

from __future__ import annotations

import os

_force_fallback = os.environ.get("VFORGE_PURE_PYTHON", "0").strip() not in ("", "0")

if not _force_fallback:
    try:
        from ._argmax import argmax_dot

        BACKEND = "cython"
    except ImportError:
        from ._fallback import argmax_dot

        BACKEND = "numpy"
else:
    from ._fallback import argmax_dot

    BACKEND = "numpy"

__all__ = ["argmax_dot", "BACKEND"]
