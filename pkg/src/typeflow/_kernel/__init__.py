"""Kernel backend selection.

The compiled extension handles the hot inner loops (CSV parsing, replay,
coordinate resolution). When it is unavailable, or ``TYPEFLOW_PURE=1`` is set,
the pure-Python reference backend takes over with identical semantics.
"""

from __future__ import annotations

import os

from . import pure
from .pure import (
    KIND_CARET_MOVE,
    KIND_DELETE_BACKWARD,
    KIND_DELETE_FORWARD,
    KIND_INSERT,
    KIND_NO_EFFECT,
)

_backend = pure
BACKEND = "pure"

if os.environ.get("TYPEFLOW_PURE") != "1":
    try:
        from . import _native

        _backend = _native
        BACKEND = "native"
    except ImportError:
        pass

parse_rows = _backend.parse_rows
replay_events = _backend.replay_events
resolve_coords = _backend.resolve_coords

__all__ = [
    "BACKEND",
    "KIND_CARET_MOVE",
    "KIND_DELETE_BACKWARD",
    "KIND_DELETE_FORWARD",
    "KIND_INSERT",
    "KIND_NO_EFFECT",
    "parse_rows",
    "replay_events",
    "resolve_coords",
    "pure",
]
