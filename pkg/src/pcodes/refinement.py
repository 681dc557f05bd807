"""Selects the partition-refinement backend at import time.

The Cython extension is preferred; the pure-Python twin is used when the
extension is missing (source install without a compiler) or when the
``PCODES_PURE_PYTHON`` environment variable is set to a nonempty value.
Both expose the same ``Refiner`` contract and produce identical
invariant hashes, so results never depend on the backend.
"""

from __future__ import annotations

import os

if os.environ.get("PCODES_PURE_PYTHON"):
    from ._refine_py import Refiner

    BACKEND = "python"
else:
    try:
        from ._refine_c import Refiner  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        from ._refine_py import Refiner  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["Refiner", "BACKEND"]
