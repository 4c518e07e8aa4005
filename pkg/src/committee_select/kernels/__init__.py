"""Graph kernel backend selection.

Prefers the compiled extension; falls back to the pure NumPy
implementation when it is not built. Set COMMITTEE_SELECT_PURE=1 to
force the fallback (used by the backend-comparison benchmark and
tests).
"""

import os

from committee_select.kernels import pure as _pure

_forced_pure = os.environ.get("COMMITTEE_SELECT_PURE", "") not in ("", "0")

if not _forced_pure:
    try:
        from committee_select.kernels import _ckern as _active
    except ImportError:
        _active = _pure
else:
    _active = _pure

BACKEND = _active.BACKEND_NAME

bfs_row = _active.bfs_row
sweep_stats = _active.sweep_stats
triangle_counts = _active.triangle_counts
betweenness = _active.betweenness


def get_backend(name):
    """Return the named backend module ('compiled' or 'pure'), for benchmarks."""
    if name == "pure":
        return _pure
    if name == "compiled":
        from committee_select.kernels import _ckern
        return _ckern
    raise ValueError(f"unknown kernel backend: {name!r}")
