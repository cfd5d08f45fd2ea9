"""Raw key-event model: canonical symbols, CSV_V1 parsing and serialization.

Events are held columnar (numpy arrays) so multi-million-event streams stay
cheap; :class:`KeyEvent` objects are materialized on access only.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

import numpy as np

from . import _kernel
from ._symbols import (
    NAMED_KEY_CODES,
    code_to_symbol,
    normalize_key_symbol,
    symbol_to_code,
)
from .errors import (
    MalformedRowError,
    OrderViolationError,
    TimestampInversionError,
)

__all__ = [
    "CSV_V1_HEADER",
    "KeyEvent",
    "KeyEventStream",
    "KeylogFormat",
    "NAMED_KEY_CODES",
    "code_to_symbol",
    "normalize_key_symbol",
    "parse_keylog",
    "serialize_keylog",
    "symbol_to_code",
]

CSV_V1_HEADER = "index,key,keydown_ms,keyup_ms"


class KeylogFormat(Enum):
    CSV_V1 = "csv_v1"


def _csv_label(symbol: str) -> str:
    # CSV_V1 is unquoted, so the comma key is spelled out.
    return "Comma" if symbol == "," else symbol


@dataclass(frozen=True)
class KeyEvent:
    """One key press/release pair with millisecond timestamps."""

    index: int
    key: str
    keydown_ms: int
    keyup_ms: int


class KeyEventStream:
    """Ordered, validated key events for one session.

    Backed by parallel numpy arrays (``codes``, ``keydown_ms``, ``keyup_ms``);
    indexing materializes :class:`KeyEvent` objects lazily.
    """

    __slots__ = ("codes", "keydown_ms", "keyup_ms", "source_id")

    def __init__(
        self,
        codes: np.ndarray,
        keydown_ms: np.ndarray,
        keyup_ms: np.ndarray,
        source_id: str = "",
    ) -> None:
        self.codes = codes
        self.keydown_ms = keydown_ms
        self.keyup_ms = keyup_ms
        self.source_id = source_id

    def __len__(self) -> int:
        return len(self.codes)

    def __getitem__(self, i: int) -> KeyEvent:
        return KeyEvent(
            index=i if i >= 0 else len(self) + i,
            key=code_to_symbol(int(self.codes[i])),
            keydown_ms=int(self.keydown_ms[i]),
            keyup_ms=int(self.keyup_ms[i]),
        )

    def __iter__(self) -> Iterator[KeyEvent]:
        for i in range(len(self)):
            yield self[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KeyEventStream):
            return NotImplemented
        return (
            np.array_equal(self.codes, other.codes)
            and np.array_equal(self.keydown_ms, other.keydown_ms)
            and np.array_equal(self.keyup_ms, other.keyup_ms)
        )

    @property
    def events(self) -> list[KeyEvent]:
        return list(self)

    @classmethod
    def from_events(
        cls, events: Iterable[KeyEvent | tuple], source_id: str = ""
    ) -> "KeyEventStream":
        """Build a validated stream from events or (key, keydown, keyup) tuples."""
        keys: list[str] = []
        downs: list[int] = []
        ups: list[int] = []
        for ev in events:
            if isinstance(ev, KeyEvent):
                keys.append(ev.key)
                downs.append(ev.keydown_ms)
                ups.append(ev.keyup_ms)
            else:
                key, down, up = ev
                keys.append(key)
                downs.append(down)
                ups.append(up)
        codes = np.array(
            [symbol_to_code(normalize_key_symbol(k)) for k in keys], dtype=np.int32
        )
        stream = cls(
            codes,
            np.array(downs, dtype=np.int64),
            np.array(ups, dtype=np.int64),
            source_id,
        )
        _validate_times(stream.keydown_ms, stream.keyup_ms)
        return stream


def _validate_times(keydown_ms: np.ndarray, keyup_ms: np.ndarray) -> None:
    bad = np.flatnonzero(keyup_ms < keydown_ms)
    if bad.size:
        r = int(bad[0])
        raise TimestampInversionError(r, int(keydown_ms[r]), int(keyup_ms[r]))
    if len(keydown_ms) > 1:
        drops = np.flatnonzero(np.diff(keydown_ms) < 0)
        if drops.size:
            r = int(drops[0]) + 1
            raise OrderViolationError(r, int(keydown_ms[r]), int(keydown_ms[r - 1]))


def parse_keylog(
    raw: bytes, format: KeylogFormat = KeylogFormat.CSV_V1, source_id: str = ""
) -> KeyEventStream:
    """Parse a CSV_V1 keylog into a validated stream.

    Every data row becomes exactly one event; ordering is verified, never
    repaired. Errors carry the offending 0-based data-row number.
    """
    if format is not KeylogFormat.CSV_V1:
        raise ValueError(f"unsupported keylog format: {format}")
    newline = raw.find(b"\n")
    header = raw[: newline if newline >= 0 else len(raw)]
    if header.rstrip(b"\r").decode("utf-8", "replace") != CSV_V1_HEADER:
        raise MalformedRowError(-1, f"bad header line (expected {CSV_V1_HEADER!r})")
    body = raw[newline + 1 :] if newline >= 0 else b""
    codes, keydown, keyup = _kernel.parse_rows(body)
    _validate_times(keydown, keyup)
    return KeyEventStream(codes, keydown, keyup, source_id)


def serialize_keylog(stream: KeyEventStream) -> bytes:
    """Render a stream back to CSV_V1 bytes (inverse of :func:`parse_keylog`)."""
    lines = [CSV_V1_HEADER]
    for i in range(len(stream)):
        symbol = code_to_symbol(int(stream.codes[i]))
        lines.append(
            f"{i},{_csv_label(symbol)},{int(stream.keydown_ms[i])},{int(stream.keyup_ms[i])}"
        )
    lines.append("")
    return "\n".join(lines).encode("utf-8")
