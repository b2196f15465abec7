"""Kernel backend selection.

``_speedups`` is a Cython extension compiled at install time.  When it is
importable it backs the hot loops; otherwise the pure-Python twin does.  Both
produce identical outputs (tested), so certificates and campaign reports do
not depend on which one is active.

Set ``CERTIGRAPH_KERNELS=pure`` to force the fallback or ``fast`` to insist
on the extension (ImportError if it was not built).
"""

from __future__ import annotations

import os

from . import pure as _pure

_FUNCTIONS = (
    "component_labels",
    "bridge_mask",
    "count_perfect_matchings",
    "first_perfect_matching",
    "find_alternating_cycle",
    "cut_color_vertex",
    "mono_arcs",
)

_requested = os.environ.get("CERTIGRAPH_KERNELS", "auto").strip().lower()
if _requested not in ("auto", "", "fast", "pure"):
    raise ImportError(f"CERTIGRAPH_KERNELS must be auto, fast or pure, not {_requested!r}")

_impl = None
if _requested in ("auto", "", "fast"):
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        if _requested == "fast":
            raise
        _impl = None
if _impl is None:
    _impl = _pure

BACKEND = "pure" if _impl is _pure else "fast"


def backend_name() -> str:
    """Name of the active backend: "fast" (compiled) or "pure"."""
    return BACKEND


def get_backend(name: str):
    """Module object for an explicit backend; used by equivalence tests and
    the benchmark."""
    if name == "pure":
        return _pure
    if name == "fast":
        from . import _speedups

        return _speedups
    raise ValueError(f"unknown backend {name!r}")


component_labels = _impl.component_labels
bridge_mask = _impl.bridge_mask
count_perfect_matchings = _impl.count_perfect_matchings
first_perfect_matching = _impl.first_perfect_matching
find_alternating_cycle = _impl.find_alternating_cycle
cut_color_vertex = _impl.cut_color_vertex
mono_arcs = _impl.mono_arcs
