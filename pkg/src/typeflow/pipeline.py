"""Full per-session analysis pipeline.

Runs replay, segmentation, attribution, annotation and metric computation in
one pass, keeping everything columnar so corpus-scale loads stay fast. Token
objects are materialized from the arrays only on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .annotate import Annotation, Annotator, LexiconSuffixTagger
from .keylog import KeyEventStream
from .metrics import SessionCurve, cumulative_curve
from .replay import ReplayResult, TokenSpan, attribute_arrays, replay, token_ranges
from .trends import GRID, resample_curve


@dataclass
class SessionAnalysis:
    """Derived analytics for one session, columnar across tokens."""

    stream: KeyEventStream
    final_text: str
    provenance: np.ndarray
    token_starts: np.ndarray
    token_ends: np.ndarray
    token_texts: list[str]
    tok_start_ms: np.ndarray
    tok_end_ms: np.ndarray
    tok_keystrokes: np.ndarray
    tok_revisions: np.ndarray
    tok_last_event: np.ndarray
    tok_t_norm_start: np.ndarray
    tok_t_norm_end: np.ndarray
    rate_raw: np.ndarray
    rate_z: np.ndarray
    annotations: list[Annotation]
    curve: SessionCurve
    resampled: np.ndarray
    orphan_count: int
    session_start_ms: int
    session_end_ms: int

    @property
    def token_count(self) -> int:
        return len(self.token_texts)

    @property
    def total_keystrokes(self) -> int:
        return len(self.stream)

    @property
    def total_revisions(self) -> int:
        return int(self.tok_revisions.sum())

    def token(self, i: int) -> TokenSpan:
        s, e = int(self.token_starts[i]), int(self.token_ends[i])
        return TokenSpan(
            token_index=i,
            text=self.token_texts[i],
            char_range=(s, e),
            start_ms=int(self.tok_start_ms[i]),
            end_ms=int(self.tok_end_ms[i]),
            keystroke_count=int(self.tok_keystrokes[i]),
            revision_count=int(self.tok_revisions[i]),
            annotation=self.annotations[i],
            insert_event_indices=tuple(int(x) for x in self.provenance[s:e]),
        )

    def tokens(self) -> list[TokenSpan]:
        return [self.token(i) for i in range(self.token_count)]


class AnnotationMemo:
    """Caches annotations by token text; annotators are deterministic, so a
    corpus-wide memo collapses tagging to one call per distinct word."""

    def __init__(self, annotator: Annotator | None = None) -> None:
        self.annotator = annotator if annotator is not None else LexiconSuffixTagger()
        self._cache: dict[str, Annotation] = {}

    def annotate(self, token_texts: Sequence[str]) -> list[Annotation]:
        cache = self._cache
        missing = sorted({t for t in token_texts if t not in cache})
        if missing:
            tagged = self.annotator.tag(missing)
            if len(tagged) != len(missing):
                raise ValueError(
                    "annotator returned "
                    f"{len(tagged)} annotations for {len(missing)} tokens"
                )
            cache.update(zip(missing, tagged))
        return [cache[t] for t in token_texts]


def analyze_stream(
    stream: KeyEventStream, memo: AnnotationMemo | None = None
) -> SessionAnalysis:
    """Analyze one validated stream end to end.

    Tokenless sessions are legal here: all events land in the orphan bucket
    and the token arrays stay empty.
    """
    if memo is None:
        memo = AnnotationMemo()
    result: ReplayResult = replay(stream)
    final_text = result.final_text
    curve = cumulative_curve(stream)
    session_start = int(stream.keydown_ms[0])
    session_end = session_start + curve.session_span_ms
    span = curve.session_span_ms

    ranges = token_ranges(final_text)
    n_tok = len(ranges)
    if n_tok == 0:
        empty_i = np.empty(0, dtype=np.int64)
        empty_f = np.empty(0, dtype=np.float64)
        return SessionAnalysis(
            stream=stream,
            final_text=final_text,
            provenance=result.provenance,
            token_starts=empty_i,
            token_ends=empty_i,
            token_texts=[],
            tok_start_ms=empty_i,
            tok_end_ms=empty_i,
            tok_keystrokes=empty_i,
            tok_revisions=empty_i,
            tok_last_event=empty_i,
            tok_t_norm_start=empty_f,
            tok_t_norm_end=empty_f,
            rate_raw=empty_f,
            rate_z=empty_f,
            annotations=[],
            curve=curve,
            resampled=resample_curve(curve, GRID),
            orphan_count=len(stream),
            session_start_ms=session_start,
            session_end_ms=session_end,
        )

    starts = np.array([s for s, _ in ranges], dtype=np.int64)
    ends = np.array([e for _, e in ranges], dtype=np.int64)
    texts = [final_text[s:e] for s, e in ranges]
    _, kc, rev, start_ms, end_ms, last_event = attribute_arrays(result, starts, n_tok)

    span_ms = (end_ms - start_ms).astype(np.float64)
    rate_raw = np.divide(
        kc * 1000.0, span_ms, out=np.zeros(n_tok, dtype=np.float64), where=span_ms > 0
    )

    return SessionAnalysis(
        stream=stream,
        final_text=final_text,
        provenance=result.provenance,
        token_starts=starts,
        token_ends=ends,
        token_texts=texts,
        tok_start_ms=start_ms,
        tok_end_ms=end_ms,
        tok_keystrokes=kc,
        tok_revisions=rev,
        tok_last_event=last_event,
        tok_t_norm_start=(start_ms - session_start) / span,
        tok_t_norm_end=(end_ms - session_start) / span,
        rate_raw=rate_raw,
        rate_z=np.zeros(n_tok, dtype=np.float64),
        annotations=memo.annotate(texts),
        curve=curve,
        resampled=resample_curve(curve, GRID),
        orphan_count=0,
        session_start_ms=session_start,
        session_end_ms=session_end,
    )
