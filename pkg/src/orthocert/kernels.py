"""Backend selection for the hot kernels.

Prefers the compiled extension, falling back to the portable NumPy/Python
implementations.  Set ORTHOCERT_BACKEND=pure or ORTHOCERT_BACKEND=compiled
to force a choice (forcing "compiled" raises if the extension is missing).
Both backends are bit-for-bit interchangeable.
"""

from __future__ import annotations

import os

_forced = os.environ.get("ORTHOCERT_BACKEND")

if _forced == "pure":
    from . import _kernels_py as _impl

    BACKEND = "pure"
elif _forced == "compiled":
    from . import _kernels as _impl  # type: ignore[no-redef]

    BACKEND = "compiled"
elif _forced:
    raise ImportError(f"unknown ORTHOCERT_BACKEND value: {_forced!r}")
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "pure"

pair_scan = _impl.pair_scan
distance_counts = _impl.distance_counts
sampled_scan = _impl.sampled_scan
gf2_rank = _impl.gf2_rank
max_clique = _impl.max_clique

__all__ = [
    "BACKEND",
    "pair_scan",
    "distance_counts",
    "sampled_scan",
    "gf2_rank",
    "max_clique",
]
