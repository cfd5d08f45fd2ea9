"""Exception hierarchy for the typeflow package."""

from __future__ import annotations


class TypeflowError(Exception):
    """Base class for all typeflow errors."""


# ---------------------------------------------------------------------------
# Keylog parsing


class KeylogError(TypeflowError):
    """A keylog file or event stream violates the event model."""


class MalformedRowError(KeylogError):
    def __init__(self, row: int, reason: str) -> None:
        self.row = row
        self.reason = reason
        super().__init__(f"row {row}: {reason}")


class TimestampInversionError(KeylogError):
    def __init__(self, row: int, keydown_ms: int, keyup_ms: int) -> None:
        self.row = row
        super().__init__(f"row {row}: keyup_ms {keyup_ms} precedes keydown_ms {keydown_ms}")


class OrderViolationError(KeylogError):
    def __init__(self, row: int, keydown_ms: int, previous_ms: int) -> None:
        self.row = row
        super().__init__(
            f"row {row}: keydown_ms {keydown_ms} decreases below previous {previous_ms}"
        )


class UnknownKeySymbolError(KeylogError):
    def __init__(self, symbol: str) -> None:
        self.symbol = symbol
        super().__init__(f"unknown key symbol: {symbol!r}")


# ---------------------------------------------------------------------------
# Replay / segmentation


class EmptySessionError(TypeflowError):
    """The session produced no word token (or no events at all)."""


# ---------------------------------------------------------------------------
# Metrics


class DegenerateSessionError(TypeflowError):
    """Session time span is zero; normalized time is undefined."""


class TimeOutOfRangeError(TypeflowError):
    """A timestamp falls outside the session span."""


class EmptySampleError(TypeflowError):
    """Boxplot statistics requested over an empty sample set."""


# ---------------------------------------------------------------------------
# Trends


class EmptyGroupError(TypeflowError):
    """A trend selector matched no session (defensive; anchor implies one)."""


# ---------------------------------------------------------------------------
# Annotation


class AnnotatorProtocolError(TypeflowError):
    """An external annotator broke the line-exchange contract."""


# ---------------------------------------------------------------------------
# Corpus


class CorpusError(TypeflowError):
    """Base class for corpus loading failures."""


class ManifestParseError(CorpusError):
    pass


class MissingKeylogFileError(CorpusError):
    def __init__(self, session_id: str, path: str) -> None:
        self.session_id = session_id
        self.path = path
        super().__init__(f"session {session_id!r}: keylog file not found: {path}")


class DuplicateIdError(CorpusError):
    def __init__(self, kind: str, ident: str) -> None:
        self.kind = kind
        self.ident = ident
        super().__init__(f"duplicate {kind} id: {ident!r}")


class BrokenReferenceError(CorpusError):
    def __init__(self, session_id: str, typist_id: str) -> None:
        self.session_id = session_id
        self.typist_id = typist_id
        super().__init__(f"session {session_id!r} references unknown typist {typist_id!r}")


class SessionLoadError(CorpusError):
    """Aggregate of per-session failures collected during a load."""

    def __init__(self, failures: list[tuple[str, Exception]]) -> None:
        self.failures = failures
        lines = "; ".join(f"{sid}: {exc}" for sid, exc in failures)
        super().__init__(f"{len(failures)} session(s) failed to load: {lines}")


# ---------------------------------------------------------------------------
# Synthetic generation


class InvalidConfigError(TypeflowError):
    """Generator configuration with non-positive counts or rates."""
