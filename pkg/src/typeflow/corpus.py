"""Corpus loading, validation and in-memory storage.

A corpus is immutable after load; a reload builds a whole new snapshot with a
fresh version number, so concurrent readers always see a consistent view. All
derived analytics are computed eagerly at load and kept in memory.
"""

from __future__ import annotations

import itertools
import json
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

import numpy as np

from .annotate import Annotator, PosTag
from .errors import (
    BrokenReferenceError,
    DuplicateIdError,
    ManifestParseError,
    MissingKeylogFileError,
    SessionLoadError,
    TypeflowError,
)
from .keylog import parse_keylog
from .metrics import zscore_rates
from .pipeline import AnnotationMemo, SessionAnalysis, analyze_stream
from .replay import TokenSpan

logger = logging.getLogger(__name__)

# Sessions shorter than this (final characters) are loaded with a warning
# flag; the threshold mirrors the minimum answer length of the study corpora
# this importer targets.
SHORT_SESSION_CHARS = 300

_VERSION_COUNTER = itertools.count(1)


class Handedness(Enum):
    LEFT = "LEFT"
    RIGHT = "RIGHT"


class CognitiveLoad(Enum):
    REMEMBER = "REMEMBER"
    UNDERSTAND = "UNDERSTAND"
    APPLY = "APPLY"
    ANALYZE = "ANALYZE"
    EVALUATE = "EVALUATE"
    CREATE = "CREATE"


class SemanticFilter(Enum):
    ALL = "ALL"
    FUNCTION = "FUNCTION"
    CONTENT = "CONTENT"


@dataclass(frozen=True)
class TypistProfile:
    typist_id: str
    l1: str
    age: int | None = None
    gender: str | None = None
    handedness: Handedness | None = None


@dataclass
class SessionRecord:
    session_id: str
    typist_id: str
    question_id: str
    cognitive_load: CognitiveLoad
    analysis: SessionAnalysis
    warning_short: bool = False

    @property
    def keylog(self):
        return self.analysis.stream


@dataclass
class Corpus:
    typists: dict[str, TypistProfile]
    sessions: dict[str, SessionRecord]
    version: int
    # word (lowercase) -> [(session_id, token_index), ...] in load order
    word_index: dict[str, list[tuple[str, int]]] = field(default_factory=dict)

    @property
    def session_count(self) -> int:
        return len(self.sessions)

    def sessions_of(self, typist_id: str) -> list[SessionRecord]:
        return [r for r in self.sessions.values() if r.typist_id == typist_id]


def _require(obj: dict, key: str, where: str):
    if key not in obj:
        raise ManifestParseError(f"{where}: missing required field {key!r}")
    return obj[key]


def _parse_typist(entry: dict) -> TypistProfile:
    if not isinstance(entry, dict):
        raise ManifestParseError("typist entry is not an object")
    tid = _require(entry, "typist_id", "typist")
    l1 = _require(entry, "l1", f"typist {tid!r}")
    handedness = entry.get("handedness")
    if handedness is not None:
        try:
            handedness = Handedness(handedness)
        except ValueError:
            raise ManifestParseError(
                f"typist {tid!r}: bad handedness {handedness!r}"
            ) from None
    age = entry.get("age")
    if age is not None and not isinstance(age, int):
        raise ManifestParseError(f"typist {tid!r}: age must be an integer")
    return TypistProfile(
        typist_id=str(tid),
        l1=str(l1),
        age=age,
        gender=entry.get("gender"),
        handedness=handedness,
    )


def load_corpus(manifest_path: str | Path, annotator: Annotator | None = None) -> Corpus:
    """Load and fully analyze a corpus from its JSON manifest.

    Per-session failures are collected and raised together after every session
    has been attempted; manifest-level problems raise immediately.
    """
    manifest_path = Path(manifest_path)
    try:
        manifest = json.loads(manifest_path.read_text("utf-8"))
    except FileNotFoundError:
        raise ManifestParseError(f"manifest not found: {manifest_path}") from None
    except json.JSONDecodeError as exc:
        raise ManifestParseError(f"manifest is not valid JSON: {exc}") from None
    if not isinstance(manifest, dict):
        raise ManifestParseError("manifest top level must be an object")

    typists: dict[str, TypistProfile] = {}
    for entry in _require(manifest, "typists", "manifest"):
        profile = _parse_typist(entry)
        if profile.typist_id in typists:
            raise DuplicateIdError("typist", profile.typist_id)
        typists[profile.typist_id] = profile

    base = manifest_path.parent
    memo = AnnotationMemo(annotator)
    sessions: dict[str, SessionRecord] = {}
    failures: list[tuple[str, Exception]] = []
    for entry in _require(manifest, "sessions", "manifest"):
        if not isinstance(entry, dict):
            raise ManifestParseError("session entry is not an object")
        sid = str(_require(entry, "session_id", "session"))
        if sid in sessions:
            raise DuplicateIdError("session", sid)
        tid = str(_require(entry, "typist_id", f"session {sid!r}"))
        if tid not in typists:
            raise BrokenReferenceError(sid, tid)
        load_label = _require(entry, "cognitive_load", f"session {sid!r}")
        try:
            load = CognitiveLoad(load_label)
        except ValueError:
            raise ManifestParseError(
                f"session {sid!r}: bad cognitive_load {load_label!r}"
            ) from None
        keylog_file = base / str(_require(entry, "keylog_file", f"session {sid!r}"))
        if not keylog_file.is_file():
            raise MissingKeylogFileError(sid, str(keylog_file))
        try:
            stream = parse_keylog(keylog_file.read_bytes(), source_id=sid)
            analysis = analyze_stream(stream, memo)
        except TypeflowError as exc:
            failures.append((sid, exc))
            continue
        warning = len(analysis.final_text) < SHORT_SESSION_CHARS
        if warning:
            logger.warning(
                "session %s: final text has only %d characters",
                sid,
                len(analysis.final_text),
            )
        sessions[sid] = SessionRecord(
            session_id=sid,
            typist_id=tid,
            question_id=str(_require(entry, "question_id", f"session {sid!r}")),
            cognitive_load=load,
            analysis=analysis,
            warning_short=warning,
        )
    if failures:
        raise SessionLoadError(failures)

    _apply_zscores(sessions)
    word_index = _build_word_index(sessions)
    return Corpus(
        typists=typists,
        sessions=sessions,
        version=next(_VERSION_COUNTER),
        word_index=word_index,
    )


def _apply_zscores(sessions: dict[str, SessionRecord]) -> None:
    # z-score scope is the typist's full token population across sessions.
    by_typist: dict[str, list[SessionRecord]] = defaultdict(list)
    for rec in sessions.values():
        by_typist[rec.typist_id].append(rec)
    for records in by_typist.values():
        rates = np.concatenate([r.analysis.rate_raw for r in records])
        zs = zscore_rates(rates)
        offset = 0
        for r in records:
            n = r.analysis.token_count
            r.analysis.rate_z = zs[offset : offset + n]
            offset += n


def _build_word_index(
    sessions: dict[str, SessionRecord]
) -> dict[str, list[tuple[str, int]]]:
    index: dict[str, list[tuple[str, int]]] = defaultdict(list)
    for sid, rec in sessions.items():
        for ti, text in enumerate(rec.analysis.token_texts):
            index[text.lower()].append((sid, ti))
    return dict(index)


def filter_tokens(
    session: SessionRecord,
    pos_filter: "set[PosTag] | None" = None,
    semantic_filter: SemanticFilter = SemanticFilter.ALL,
) -> list[TokenSpan]:
    """Tokens whose annotation satisfies both filters, order preserved.

    ``pos_filter=None`` means all parts of speech.
    """
    analysis = session.analysis
    out = []
    for i, ann in enumerate(analysis.annotations):
        if pos_filter is not None and ann.pos not in pos_filter:
            continue
        if (
            semantic_filter is not SemanticFilter.ALL
            and ann.semantic_class.value != semantic_filter.value
        ):
            continue
        out.append(analysis.token(i))
    return out
