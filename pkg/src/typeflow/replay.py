"""Event-stream replay, word-token segmentation, and event attribution.

Replay turns a validated key-event stream into final text plus a full edit
log with per-character provenance. Tokenization splits the final text into
word tokens; attribution assigns every event (including revisions, delimiter
keystrokes, caret moves and no-ops) to exactly one token.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import _kernel
from .annotate import Annotation
from .errors import EmptySessionError
from .keylog import KeyEventStream

# A token is a maximal run of alphanumerics; apostrophes and hyphens stay
# inside only when flanked by alphanumerics on both sides ("don't", "re-do").
_TOKEN_RE = re.compile(r"[^\W_]+(?:['-][^\W_]+)*", re.UNICODE)


class EditKind(Enum):
    INSERT = _kernel.KIND_INSERT
    DELETE_BACKWARD = _kernel.KIND_DELETE_BACKWARD
    DELETE_FORWARD = _kernel.KIND_DELETE_FORWARD
    CARET_MOVE = _kernel.KIND_CARET_MOVE
    NO_EFFECT = _kernel.KIND_NO_EFFECT


@dataclass(frozen=True)
class EditAction:
    """One buffer action caused by one key event."""

    kind: EditKind
    position: int
    inserted_char: str | None
    event_index: int


@dataclass(frozen=True)
class TokenSpan:
    """A word token with its time span, effort counts and annotation."""

    token_index: int
    text: str
    char_range: tuple[int, int]
    start_ms: int
    end_ms: int
    keystroke_count: int
    revision_count: int
    annotation: Annotation | None = None
    insert_event_indices: tuple[int, ...] = ()


class ReplayResult:
    """Final text, ordered edit log, and per-character event provenance."""

    def __init__(self, stream: KeyEventStream) -> None:
        kinds, positions, anchors, parents, final_ids = _kernel.replay_events(
            stream.codes
        )
        self._stream = stream
        self._kinds = kinds
        self._positions = positions
        self._anchors = anchors
        self._parents = parents
        self._final_ids = final_ids
        self.final_text = _decode_final(stream.codes, final_ids)

    @property
    def provenance(self) -> np.ndarray:
        """Event index that produced each final-text character."""
        return self._final_ids

    @cached_property
    def edits(self) -> list[EditAction]:
        codes = self._stream.codes
        out = []
        for i in range(len(self._kinds)):
            kind = EditKind(int(self._kinds[i]))
            ch = chr(int(codes[i])) if kind is EditKind.INSERT else None
            out.append(EditAction(kind, int(self._positions[i]), ch, i))
        return out

    @cached_property
    def event_coords(self) -> np.ndarray:
        """Final-text coordinate of every event (caret mapped through
        deletion chains; surviving inserts sit on their own character)."""
        n = len(self._kinds)
        finalpos = np.full(n, -1, dtype=np.int32)
        finalpos[self._final_ids] = np.arange(len(self._final_ids), dtype=np.int32)
        return _kernel.resolve_coords(
            self._kinds, self._anchors, self._parents, finalpos
        )


def _decode_final(codes: np.ndarray, final_ids: np.ndarray) -> str:
    if len(final_ids) == 0:
        return ""
    return codes[final_ids].astype(np.uint32).tobytes().decode("utf-32-le")


def replay(stream: KeyEventStream) -> ReplayResult:
    """Replay a stream through caret semantics.

    Printable characters and Space/Enter/Tab insert at the caret; Backspace
    and Delete remove around it (no effect at the buffer edges); arrow and
    Home/End keys move it, clamped; modifiers do nothing. Every event yields
    exactly one edit action.
    """
    return ReplayResult(stream)


def apply_edits(edits: Iterable[EditAction]) -> str:
    """Apply an edit log to an empty buffer (consistency check helper)."""
    buf: list[str] = []
    for e in edits:
        if e.kind is EditKind.INSERT:
            buf.insert(e.position, e.inserted_char or "")
        elif e.kind is EditKind.DELETE_BACKWARD:
            del buf[e.position - 1]
        elif e.kind is EditKind.DELETE_FORWARD:
            del buf[e.position]
    return "".join(buf)


def token_ranges(final_text: str) -> list[tuple[int, int]]:
    """Half-open character ranges of the word tokens in final text."""
    return [m.span() for m in _TOKEN_RE.finditer(final_text)]


def tokenize(result: ReplayResult, stream: KeyEventStream) -> list[TokenSpan]:
    """Segment final text into word tokens.

    Delimiters (whitespace) and standalone punctuation form boundaries and
    are excluded from token text; internal apostrophes and hyphens are kept.
    Timing here covers only the surviving characters; run
    :func:`attribute_events` to fold in revisions and delimiter keystrokes.
    """
    ranges = token_ranges(result.final_text)
    if not ranges:
        raise EmptySessionError(
            f"session {stream.source_id!r} contains no word token"
        )
    prov = result.provenance
    keydown = stream.keydown_ms
    keyup = stream.keyup_ms
    tokens = []
    for idx, (s, e) in enumerate(ranges):
        ev = prov[s:e]
        tokens.append(
            TokenSpan(
                token_index=idx,
                text=result.final_text[s:e],
                char_range=(s, e),
                start_ms=int(keydown[ev].min()),
                end_ms=int(keyup[ev].max()),
                keystroke_count=e - s,
                revision_count=0,
                insert_event_indices=tuple(int(i) for i in ev),
            )
        )
    return tokens


def attribute_events(
    result: ReplayResult, tokens: Sequence[TokenSpan]
) -> list[TokenSpan]:
    """Attribute every event of the replayed stream to exactly one token.

    Surviving inserts go to the token containing them; everything else
    (deleted inserts, deletes, delimiter inserts, caret moves, no-ops) goes
    to the token containing, or most recently preceding, the caret position
    at action time mapped into final-text coordinates. Events landing before
    the first token go to the first token.
    """
    if not tokens:
        raise EmptySessionError("cannot attribute events without tokens")
    starts = np.array([t.char_range[0] for t in tokens], dtype=np.int64)
    _, kc, rev, start_ms, end_ms, _ = attribute_arrays(result, starts, len(tokens))
    return [
        replace(
            t,
            start_ms=int(start_ms[i]),
            end_ms=int(end_ms[i]),
            keystroke_count=int(kc[i]),
            revision_count=int(rev[i]),
        )
        for i, t in enumerate(tokens)
    ]


def attribute_arrays(
    result: ReplayResult, token_starts: np.ndarray, n_tokens: int
) -> tuple[np.ndarray, ...]:
    """Columnar attribution: per-event token ids plus per-token aggregates
    (keystroke count, revision count, time span, last attributed event)."""
    stream = result._stream
    coords = result.event_coords
    kinds = result._kinds
    n = len(kinds)
    tok = np.searchsorted(token_starts, coords, side="right") - 1
    np.clip(tok, 0, n_tokens - 1, out=tok)
    kc = np.bincount(tok, minlength=n_tokens)
    is_rev = (kinds == _kernel.KIND_DELETE_BACKWARD) | (
        kinds == _kernel.KIND_DELETE_FORWARD
    )
    rev = np.bincount(tok[is_rev], minlength=n_tokens)
    start_ms = np.full(n_tokens, np.iinfo(np.int64).max, dtype=np.int64)
    end_ms = np.full(n_tokens, np.iinfo(np.int64).min, dtype=np.int64)
    np.minimum.at(start_ms, tok, stream.keydown_ms)
    np.maximum.at(end_ms, tok, stream.keyup_ms)
    last_event = np.full(n_tokens, -1, dtype=np.int64)
    np.maximum.at(last_event, tok, np.arange(n, dtype=np.int64))
    return tok, kc, rev, start_ms, end_ms, last_event
