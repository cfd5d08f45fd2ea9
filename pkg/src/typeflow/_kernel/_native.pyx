# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend: CSV row parsing, event replay, coordinate
resolution. Semantics must match ``pure.py`` exactly; the parity suite holds
both backends to identical outputs and errors."""

from libc.stdlib cimport free, malloc
from libc.string cimport memcmp

import numpy as np

from .._symbols import BYTES_LABEL_CODES, code_for_label
from ..errors import MalformedRowError

cdef int C_BACKSPACE = -1
cdef int C_DELETE = -2
cdef int C_LEFT = -3
cdef int C_RIGHT = -4
cdef int C_HOME = -5
cdef int C_END = -6
cdef int C_SHIFT = -7
cdef int C_CTRL = -8
cdef int C_ALT = -9

cdef int K_INSERT = 0
cdef int K_DELETE_BACKWARD = 1
cdef int K_DELETE_FORWARD = 2
cdef int K_CARET_MOVE = 3
cdef int K_NO_EFFECT = 4

KIND_INSERT = K_INSERT
KIND_DELETE_BACKWARD = K_DELETE_BACKWARD
KIND_DELETE_FORWARD = K_DELETE_FORWARD
KIND_CARET_MOVE = K_CARET_MOVE
KIND_NO_EFFECT = K_NO_EFFECT

_LABEL_CODES = BYTES_LABEL_CODES


def parse_rows(bytes body):
    """Parse CSV_V1 data rows (header already stripped) into code/time arrays."""
    cdef const unsigned char* s = body
    cdef Py_ssize_t size = len(body)
    cdef Py_ssize_t n = 0, i = 0
    # Row count: newline-terminated lines plus an unterminated last line.
    for i in range(size):
        if s[i] == 10:
            n += 1
    if size > 0 and s[size - 1] != 10:
        n += 1

    codes_arr = np.empty(n, dtype=np.int32)
    keydown_arr = np.empty(n, dtype=np.int64)
    keyup_arr = np.empty(n, dtype=np.int64)
    cdef int[:] codes = codes_arr
    cdef long long[:] keydown = keydown_arr
    cdef long long[:] keyup = keyup_arr

    cdef Py_ssize_t pos = 0, line_end, field_start, r = 0
    cdef Py_ssize_t c0, c1, c2  # comma positions
    cdef Py_ssize_t j, flen
    cdef long long value
    cdef unsigned char b
    cdef int commas, code
    cdef object pyfield, lookup

    while pos < size:
        line_end = pos
        while line_end < size and s[line_end] != 10:
            line_end += 1
        j = line_end
        if j > pos and s[j - 1] == 13:  # strip trailing \r
            j -= 1

        # locate the three commas
        commas = 0
        c0 = c1 = c2 = -1
        for i in range(pos, j):
            if s[i] == 44:
                if commas == 0:
                    c0 = i
                elif commas == 1:
                    c1 = i
                elif commas == 2:
                    c2 = i
                commas += 1
        if commas != 3:
            raise MalformedRowError(r, "expected 4 comma-separated fields")

        # index field: strict digits, must equal the row ordinal
        if c0 == pos:
            raise MalformedRowError(r, "non-numeric index")
        value = 0
        for i in range(pos, c0):
            b = s[i]
            if b < 48 or b > 57:
                raise MalformedRowError(r, "non-numeric index")
            value = value * 10 + (b - 48)
        if value != r:
            raise MalformedRowError(r, "index out of sequence")

        # key field
        field_start = c0 + 1
        flen = c1 - field_start
        if flen == 1 and 33 <= s[field_start] <= 126:
            b = s[field_start]
            codes[r] = b + 32 if 65 <= b <= 90 else b
        elif flen == 5 and memcmp(s + field_start, b"Space", 5) == 0:
            codes[r] = 32
        elif flen == 9 and memcmp(s + field_start, b"Backspace", 9) == 0:
            codes[r] = C_BACKSPACE
        else:
            pyfield = body[field_start:c1]
            lookup = _LABEL_CODES.get(pyfield.lower())
            if lookup is None:
                lookup = code_for_label(pyfield.decode("utf-8", "replace"))
            codes[r] = <int> lookup

        # time fields: strict digits
        if c2 == c1 + 1 or j == c2 + 1:
            raise MalformedRowError(r, "non-numeric time")
        value = 0
        for i in range(c1 + 1, c2):
            b = s[i]
            if b < 48 or b > 57:
                raise MalformedRowError(r, "non-numeric time")
            value = value * 10 + (b - 48)
        keydown[r] = value
        value = 0
        for i in range(c2 + 1, j):
            b = s[i]
            if b < 48 or b > 57:
                raise MalformedRowError(r, "non-numeric time")
            value = value * 10 + (b - 48)
        keyup[r] = value

        r += 1
        pos = line_end + 1

    return codes_arr, keydown_arr, keyup_arr


def replay_events(codes_arr):
    """Gap-buffer replay of key codes; see ``pure.replay_events`` for the
    output contract."""
    cdef const int[:] codes = codes_arr
    cdef Py_ssize_t n = codes.shape[0]

    kinds_arr = np.empty(n, dtype=np.uint8)
    positions_arr = np.empty(n, dtype=np.int32)
    anchors_arr = np.empty(n, dtype=np.int32)
    parents_arr = np.full(n, -1, dtype=np.int32)
    cdef unsigned char[:] kinds = kinds_arr
    cdef int[:] positions = positions_arr
    cdef int[:] anchors = anchors_arr
    cdef int[:] parents = parents_arr

    # Gap buffer of inserted-character ids: head [0,gap_start), tail
    # [gap_end,n). The caret always sits at the gap.
    cdef int* buf = <int*> malloc(n * sizeof(int) if n > 0 else sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t gap_start = 0, gap_end = n
    cdef Py_ssize_t i, m, k
    cdef int c, deleted
    cdef int[:] final_ids

    try:
        for i in range(n):
            c = codes[i]
            anchors[i] = buf[gap_start - 1] if gap_start > 0 else -1
            positions[i] = <int> gap_start
            if c >= 0:
                kinds[i] = K_INSERT
                buf[gap_start] = <int> i
                gap_start += 1
            elif c == C_BACKSPACE:
                if gap_start > 0:
                    kinds[i] = K_DELETE_BACKWARD
                    gap_start -= 1
                    deleted = buf[gap_start]
                    parents[deleted] = buf[gap_start - 1] if gap_start > 0 else -1
                else:
                    kinds[i] = K_NO_EFFECT
            elif c == C_DELETE:
                if gap_end < n:
                    kinds[i] = K_DELETE_FORWARD
                    deleted = buf[gap_end]
                    gap_end += 1
                    parents[deleted] = buf[gap_start - 1] if gap_start > 0 else -1
                else:
                    kinds[i] = K_NO_EFFECT
            elif c == C_LEFT:
                kinds[i] = K_CARET_MOVE
                if gap_start > 0:
                    gap_end -= 1
                    gap_start -= 1
                    buf[gap_end] = buf[gap_start]
            elif c == C_RIGHT:
                kinds[i] = K_CARET_MOVE
                if gap_end < n:
                    buf[gap_start] = buf[gap_end]
                    gap_start += 1
                    gap_end += 1
            elif c == C_HOME:
                kinds[i] = K_CARET_MOVE
                while gap_start > 0:
                    gap_end -= 1
                    gap_start -= 1
                    buf[gap_end] = buf[gap_start]
            elif c == C_END:
                kinds[i] = K_CARET_MOVE
                while gap_end < n:
                    buf[gap_start] = buf[gap_end]
                    gap_start += 1
                    gap_end += 1
            else:
                kinds[i] = K_NO_EFFECT

        m = gap_start + (n - gap_end)
        final_arr = np.empty(m, dtype=np.int32)
        if m > 0:
            final_ids = final_arr
            for k in range(gap_start):
                final_ids[k] = buf[k]
            for k in range(gap_end, n):
                final_ids[gap_start + k - gap_end] = buf[k]
    finally:
        free(buf)

    return kinds_arr, positions_arr, anchors_arr, parents_arr, final_arr


def resolve_coords(kinds_arr, anchors_arr, parents_arr, finalpos_arr):
    """Map every event to a final-text coordinate; see ``pure.resolve_coords``."""
    cdef const unsigned char[:] kinds = kinds_arr
    cdef const int[:] anchors = anchors_arr
    cdef const int[:] finalpos = finalpos_arr
    parents_copy = parents_arr.copy()
    cdef int[:] parents = parents_copy
    cdef Py_ssize_t n = kinds.shape[0]
    coords_arr = np.empty(n, dtype=np.int32)
    cdef int[:] coords = coords_arr
    cdef Py_ssize_t i
    cdef int a, b, nxt

    for i in range(n):
        if kinds[i] == K_INSERT and finalpos[i] >= 0:
            coords[i] = finalpos[i]
            continue
        a = anchors[i]
        b = a
        while a != -1 and finalpos[a] < 0:
            a = parents[a]
        while b != -1 and finalpos[b] < 0:
            nxt = parents[b]
            parents[b] = a
            b = nxt
        coords[i] = 0 if a == -1 else finalpos[a] + 1
    return coords_arr
