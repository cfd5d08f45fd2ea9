"""HTTP JSON API over a loaded corpus.

All reads are served from an immutable corpus snapshot; swapping in a freshly
loaded corpus is atomic and never blocks in-flight readers. Visual mapping
(point size, color, stroke) is deliberately left to clients; responses carry
raw values only, times as integer milliseconds and fractions rounded to six
decimals.
"""

from __future__ import annotations

import threading

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .annotate import PosTag
from .corpus import Corpus, SessionRecord, TypistProfile
from .metrics import BoxplotStats, boxplot_stats, pause_sequence
from .schemas import SCHEMAS
from .trends import TrendKind, TrendSelector, TrendSeries, group_trend


class CorpusStore:
    """Atomic holder for the current corpus snapshot."""

    def __init__(self, corpus: Corpus | None = None) -> None:
        self._corpus = corpus
        self._lock = threading.Lock()

    def get(self) -> Corpus | None:
        return self._corpus

    def swap(self, corpus: Corpus) -> None:
        with self._lock:
            self._corpus = corpus


def _error(status: int, code: str, message: str, offender: str | None = None) -> JSONResponse:
    body: dict = {"error": {"code": code, "message": message}}
    if offender is not None:
        body["error"]["offender"] = offender
    return JSONResponse(body, status_code=status)


def _round6(x: float) -> float:
    return round(float(x), 6)


def _typist_summary(profile: TypistProfile, session_count: int) -> dict:
    return {
        "typist_id": profile.typist_id,
        "age": profile.age,
        "gender": profile.gender,
        "l1": profile.l1,
        "handedness": profile.handedness.value if profile.handedness else None,
        "session_count": session_count,
    }


def _session_summary(rec: SessionRecord) -> dict:
    return {
        "session_id": rec.session_id,
        "question_id": rec.question_id,
        "cognitive_load": rec.cognitive_load.value,
        "total_keystrokes": rec.analysis.total_keystrokes,
        "token_count": rec.analysis.token_count,
        "warning_short": rec.warning_short,
    }


def _trend_payload(series: TrendSeries) -> dict:
    return {
        "kind": series.selector.kind.value,
        "anchor_session": series.selector.anchor_session,
        "session_count": series.session_count,
        "grid": [_round6(g) for g in series.grid],
        "mean_counts": [_round6(c) for c in series.mean_counts],
    }


def _boxplot_payload(stats: BoxplotStats) -> dict:
    return {
        "median": _round6(stats.median),
        "q1": _round6(stats.q1),
        "q3": _round6(stats.q3),
        "whisker_low": _round6(stats.whisker_low),
        "whisker_high": _round6(stats.whisker_high),
        "outliers": [_round6(v) for v in stats.outliers],
        "n": stats.n,
    }


def _parse_pos_filter(raw: str | None) -> "set[PosTag] | None | JSONResponse":
    if raw is None or raw == "":
        return None
    out = set()
    for name in raw.split(","):
        try:
            out.add(PosTag[name.strip().upper()])
        except KeyError:
            return _error(
                400, "unknown_pos_tag", f"unknown part-of-speech tag {name!r}", name
            )
    return out


def _parse_trend_kinds(raw: str | None) -> "list[TrendKind] | JSONResponse":
    if raw is None or raw == "":
        return []
    out = []
    for name in raw.split(","):
        try:
            out.append(TrendKind(name.strip().lower()))
        except ValueError:
            return _error(
                400, "unknown_trend_selector", f"unknown trend selector {name!r}", name
            )
    return out


def create_app(store: CorpusStore | None = None) -> FastAPI:
    """Build the API application around a corpus store."""
    if store is None:
        store = CorpusStore()
    app = FastAPI(title="typeflow", docs_url=None, redoc_url=None)
    app.state.store = store
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["GET"], allow_headers=["*"]
    )

    def corpus_or_none() -> Corpus | None:
        return store.get()

    @app.get("/healthz")
    def healthz():
        corpus = corpus_or_none()
        return {
            "status": "ok" if corpus is not None else "no_corpus",
            "corpus_version": corpus.version if corpus is not None else 0,
            "session_count": corpus.session_count if corpus is not None else 0,
        }

    @app.get("/schema")
    def schema_index():
        return {"schemas": sorted(SCHEMAS)}

    @app.get("/schema/{name}")
    def schema(name: str):
        doc = SCHEMAS.get(name)
        if doc is None:
            return _error(404, "unknown_schema", f"no schema named {name!r}", name)
        return doc

    @app.get("/typists")
    def typists():
        corpus = corpus_or_none()
        if corpus is None:
            return _error(503, "no_corpus", "no corpus loaded")
        counts: dict[str, int] = {}
        for rec in corpus.sessions.values():
            counts[rec.typist_id] = counts.get(rec.typist_id, 0) + 1
        return [
            _typist_summary(p, counts.get(tid, 0))
            for tid, p in corpus.typists.items()
        ]

    @app.get("/typists/{typist_id}/sessions")
    def typist_sessions(typist_id: str):
        corpus = corpus_or_none()
        if corpus is None:
            return _error(503, "no_corpus", "no corpus loaded")
        if typist_id not in corpus.typists:
            return _error(
                404, "unknown_typist", f"no typist {typist_id!r}", typist_id
            )
        return [
            _session_summary(rec)
            for rec in corpus.sessions.values()
            if rec.typist_id == typist_id
        ]

    @app.get("/sessions/{session_id}/plot")
    def session_plot(
        session_id: str,
        pos: str | None = None,
        semantic: str | None = None,
        trends: str | None = None,
    ):
        corpus = corpus_or_none()
        if corpus is None:
            return _error(503, "no_corpus", "no corpus loaded")
        rec = corpus.sessions.get(session_id)
        if rec is None:
            return _error(
                404, "unknown_session", f"no session {session_id!r}", session_id
            )
        pos_filter = _parse_pos_filter(pos)
        if isinstance(pos_filter, JSONResponse):
            return pos_filter
        if semantic not in (None, "", "function", "content"):
            return _error(
                400,
                "unknown_semantic_filter",
                f"semantic filter must be 'function' or 'content', got {semantic!r}",
                semantic,
            )
        kinds = _parse_trend_kinds(trends)
        if isinstance(kinds, JSONResponse):
            return kinds

        analysis = rec.analysis
        points = []
        for i, ann in enumerate(analysis.annotations):
            if pos_filter is not None and ann.pos not in pos_filter:
                continue
            if semantic in ("function", "content") and ann.semantic_class.value.lower() != semantic:
                continue
            points.append(
                {
                    "token_index": i,
                    "text": analysis.token_texts[i],
                    "t_norm_end": _round6(analysis.tok_t_norm_end[i]),
                    "cumulative_count": int(analysis.tok_last_event[i]) + 1,
                    "rate_z": _round6(analysis.rate_z[i]),
                    "revision_count": int(analysis.tok_revisions[i]),
                    "pos": ann.pos.value,
                    "semantic_class": ann.semantic_class.value,
                }
            )
        trend_payloads = [
            _trend_payload(group_trend(corpus, TrendSelector(kind, session_id)))
            for kind in kinds
        ]
        profile = corpus.typists[rec.typist_id]
        return {
            "session_id": session_id,
            "session_meta": {
                "typist": _typist_summary(
                    profile,
                    sum(1 for r in corpus.sessions.values() if r.typist_id == rec.typist_id),
                ),
                "question_id": rec.question_id,
                "cognitive_load": rec.cognitive_load.value,
                "total_keystrokes": analysis.total_keystrokes,
                "token_count": analysis.token_count,
                "final_char_count": len(analysis.final_text),
                "warning_short": rec.warning_short,
            },
            "points": points,
            "trends": trend_payloads,
        }

    @app.get("/sessions/{session_id}/tokens/{token_index}/detail")
    def token_detail(session_id: str, token_index: str):
        corpus = corpus_or_none()
        if corpus is None:
            return _error(503, "no_corpus", "no corpus loaded")
        rec = corpus.sessions.get(session_id)
        if rec is None:
            return _error(
                404, "unknown_session", f"no session {session_id!r}", session_id
            )
        if not token_index.isdigit() or int(token_index) >= rec.analysis.token_count:
            return _error(
                404,
                "unknown_token",
                f"session {session_id!r} has no token {token_index!r}",
                token_index,
            )
        idx = int(token_index)
        analysis = rec.analysis
        text = analysis.token_texts[idx]
        s, e = int(analysis.token_starts[idx]), int(analysis.token_ends[idx])
        own = pause_sequence(analysis.provenance[s:e], analysis.stream.keydown_ms)
        observed = [
            {"position": k, "char": ch, "pause_ms": p}
            for k, (ch, p) in enumerate(zip(text, own))
        ]

        # Population: every other instance of the same word corpus-wide,
        # the clicked typist's other sessions included.
        samples: list[list[int]] = [[] for _ in text]
        for other_sid, other_idx in corpus.word_index.get(text.lower(), ()):
            if other_sid == session_id and other_idx == idx:
                continue
            other = corpus.sessions[other_sid].analysis
            os_, oe = (
                int(other.token_starts[other_idx]),
                int(other.token_ends[other_idx]),
            )
            for k, p in enumerate(
                pause_sequence(other.provenance[os_:oe], other.stream.keydown_ms)
            ):
                if p is not None:
                    samples[k].append(p)
        population = [
            {
                "position": k,
                "char": ch,
                "stats": _boxplot_payload(boxplot_stats(samples[k]))
                if samples[k]
                else None,
            }
            for k, ch in enumerate(text)
        ]
        return {"token_text": text, "observed": observed, "population": population}

    return app
