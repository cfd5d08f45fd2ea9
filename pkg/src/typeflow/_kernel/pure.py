"""Pure-Python kernel backend.

Reference implementation of the three hot kernels (CSV row parsing, event
replay, caret-coordinate resolution). The compiled backend in ``_native.pyx``
must match this module's outputs and raised errors bit for bit; the parity
suite enforces that.
"""

from __future__ import annotations

import numpy as np

from .._symbols import (
    BYTES_LABEL_CODES,
    CODE_BACKSPACE,
    CODE_DELETE,
    CODE_END,
    CODE_HOME,
    CODE_LEFT,
    CODE_RIGHT,
    code_for_label,
)
from ..errors import MalformedRowError

# Edit-action kind codes shared by both backends.
KIND_INSERT = 0
KIND_DELETE_BACKWARD = 1
KIND_DELETE_FORWARD = 2
KIND_CARET_MOVE = 3
KIND_NO_EFFECT = 4


def parse_rows(body: bytes) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Parse CSV_V1 data rows (header already stripped) into code/time arrays."""
    lines = body.split(b"\n")
    if lines and lines[-1] == b"":
        lines.pop()
    n = len(lines)
    codes = np.empty(n, dtype=np.int32)
    keydown = np.empty(n, dtype=np.int64)
    keyup = np.empty(n, dtype=np.int64)
    for r, line in enumerate(lines):
        if line.endswith(b"\r"):
            line = line[:-1]
        parts = line.split(b",")
        if len(parts) != 4:
            raise MalformedRowError(r, "expected 4 comma-separated fields")
        if not parts[0].isdigit():
            raise MalformedRowError(r, "non-numeric index")
        if int(parts[0]) != r:
            raise MalformedRowError(r, "index out of sequence")
        field = parts[1]
        if len(field) == 1 and 33 <= field[0] <= 126:
            b = field[0]
            codes[r] = b + 32 if 65 <= b <= 90 else b
        else:
            code = BYTES_LABEL_CODES.get(field.lower())
            if code is None:
                code = code_for_label(field.decode("utf-8", "replace"))
            codes[r] = code
        if not (parts[2].isdigit() and parts[3].isdigit()):
            raise MalformedRowError(r, "non-numeric time")
        keydown[r] = int(parts[2])
        keyup[r] = int(parts[3])
    return codes, keydown, keyup


def replay_events(
    codes: np.ndarray,
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Replay key codes through caret semantics.

    Returns per-event arrays ``(kinds, positions, anchors, parents)`` plus
    ``final_ids``, the event index of each surviving character in final-text
    order.

    ``anchors[i]`` is the id of the character left of the caret when event i
    fired (-1 at buffer start). ``parents[d]`` is the id left of character d
    at the moment d was deleted; chasing parents from any anchor reaches the
    nearest character that still survives, which is how caret positions are
    later mapped into final-text coordinates.
    """
    n = len(codes)
    kinds = np.empty(n, dtype=np.uint8)
    positions = np.empty(n, dtype=np.int32)
    anchors = np.empty(n, dtype=np.int32)
    parents = np.full(n, -1, dtype=np.int32)
    # Two-stack gap buffer: `head` holds ids left of the caret (top = nearest),
    # `tail` holds ids right of it reversed. Local edits stay O(1), matching
    # the compiled kernel's complexity.
    head: list[int] = []
    tail: list[int] = []
    for i in range(n):
        c = int(codes[i])
        anchors[i] = head[-1] if head else -1
        positions[i] = len(head)
        if c >= 0:
            kinds[i] = KIND_INSERT
            head.append(i)
        elif c == CODE_BACKSPACE:
            if head:
                kinds[i] = KIND_DELETE_BACKWARD
                deleted = head.pop()
                parents[deleted] = head[-1] if head else -1
            else:
                kinds[i] = KIND_NO_EFFECT
        elif c == CODE_DELETE:
            if tail:
                kinds[i] = KIND_DELETE_FORWARD
                deleted = tail.pop()
                parents[deleted] = head[-1] if head else -1
            else:
                kinds[i] = KIND_NO_EFFECT
        elif c == CODE_LEFT:
            kinds[i] = KIND_CARET_MOVE
            if head:
                tail.append(head.pop())
        elif c == CODE_RIGHT:
            kinds[i] = KIND_CARET_MOVE
            if tail:
                head.append(tail.pop())
        elif c == CODE_HOME:
            kinds[i] = KIND_CARET_MOVE
            while head:
                tail.append(head.pop())
        elif c == CODE_END:
            kinds[i] = KIND_CARET_MOVE
            while tail:
                head.append(tail.pop())
        else:  # Shift/Ctrl/Alt and anything non-editing
            kinds[i] = KIND_NO_EFFECT
    final_ids = np.array(head + tail[::-1], dtype=np.int32)
    return kinds, positions, anchors, parents, final_ids


def resolve_coords(
    kinds: np.ndarray,
    anchors: np.ndarray,
    parents: np.ndarray,
    finalpos: np.ndarray,
) -> np.ndarray:
    """Map every event to a final-text coordinate.

    Surviving inserts land on their own final position; everything else
    resolves its anchor through the deletion-parent chain (with path
    compression) to the nearest surviving character and sits just right of it.
    """
    n = len(kinds)
    coords = np.empty(n, dtype=np.int32)
    parents = parents.copy()
    for i in range(n):
        if kinds[i] == KIND_INSERT and finalpos[i] >= 0:
            coords[i] = finalpos[i]
            continue
        a = int(anchors[i])
        first = a
        while a != -1 and finalpos[a] < 0:
            a = int(parents[a])
        b = first
        while b != -1 and finalpos[b] < 0:
            nxt = int(parents[b])
            parents[b] = a
            b = nxt
        coords[i] = 0 if a == -1 else finalpos[a] + 1
    return coords
