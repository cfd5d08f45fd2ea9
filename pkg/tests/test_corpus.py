from __future__ import annotations

import json

import pytest

from typeflow.annotate import PosTag
from typeflow.corpus import (
    CognitiveLoad,
    SemanticFilter,
    filter_tokens,
    load_corpus,
)
from typeflow.errors import (
    BrokenReferenceError,
    DuplicateIdError,
    ManifestParseError,
    MissingKeylogFileError,
    SessionLoadError,
)
from typeflow.keylog import CSV_V1_HEADER


def write_keylog(path, keys, step=100, hold=50):
    lines = [CSV_V1_HEADER]
    for i, k in enumerate(keys):
        lines.append(f"{i},{k},{i * step},{i * step + hold}")
    path.write_text("\n".join(lines) + "\n")


def keys_for(text: str) -> list[str]:
    return ["Space" if c == " " else c for c in text]


def write_corpus(tmp_path, sessions, typists=None):
    (tmp_path / "keylogs").mkdir(exist_ok=True)
    manifest_sessions = []
    seen = set()
    default_typists = []
    for sid, tid, text in sessions:
        write_keylog(tmp_path / "keylogs" / f"{sid}.csv", keys_for(text))
        manifest_sessions.append(
            {
                "session_id": sid,
                "typist_id": tid,
                "question_id": "q00",
                "cognitive_load": "REMEMBER",
                "keylog_file": f"keylogs/{sid}.csv",
            }
        )
        if tid not in seen:
            seen.add(tid)
            default_typists.append({"typist_id": tid, "l1": "English"})
    manifest = {
        "typists": typists if typists is not None else default_typists,
        "sessions": manifest_sessions,
    }
    path = tmp_path / "manifest.json"
    path.write_text(json.dumps(manifest))
    return path


class TestLoad:
    def test_counts(self, tmp_path):
        path = write_corpus(
            tmp_path,
            [
                ("s1", "u1", "the cat sat"),
                ("s2", "u1", "a dog ran"),
                ("s3", "u2", "hello there friend"),
                ("s4", "u2", "more words here"),
            ],
        )
        corpus = load_corpus(path)
        assert len(corpus.typists) == 2
        assert corpus.session_count == 4
        assert corpus.version >= 1

    def test_version_increases(self, tmp_path):
        path = write_corpus(tmp_path, [("s1", "u1", "hi there")])
        v1 = load_corpus(path).version
        v2 = load_corpus(path).version
        assert v2 > v1

    def test_broken_reference(self, tmp_path):
        path = write_corpus(
            tmp_path,
            [("s1", "ghost", "hi there")],
            typists=[{"typist_id": "u1", "l1": "English"}],
        )
        with pytest.raises(BrokenReferenceError) as err:
            load_corpus(path)
        assert err.value.session_id == "s1"

    def test_duplicate_session_id(self, tmp_path):
        path = write_corpus(tmp_path, [("s1", "u1", "hi there")])
        manifest = json.loads(path.read_text())
        manifest["sessions"].append(dict(manifest["sessions"][0]))
        path.write_text(json.dumps(manifest))
        with pytest.raises(DuplicateIdError):
            load_corpus(path)

    def test_duplicate_typist_id(self, tmp_path):
        path = write_corpus(
            tmp_path,
            [("s1", "u1", "hi there")],
            typists=[
                {"typist_id": "u1", "l1": "English"},
                {"typist_id": "u1", "l1": "French"},
            ],
        )
        with pytest.raises(DuplicateIdError):
            load_corpus(path)

    def test_missing_keylog_file(self, tmp_path):
        path = write_corpus(tmp_path, [("s1", "u1", "hi there")])
        (tmp_path / "keylogs" / "s1.csv").unlink()
        with pytest.raises(MissingKeylogFileError):
            load_corpus(path)

    def test_bad_manifest_json(self, tmp_path):
        path = tmp_path / "manifest.json"
        path.write_text("{nope")
        with pytest.raises(ManifestParseError):
            load_corpus(path)

    def test_bad_cognitive_load(self, tmp_path):
        path = write_corpus(tmp_path, [("s1", "u1", "hi there")])
        manifest = json.loads(path.read_text())
        manifest["sessions"][0]["cognitive_load"] = "PONDER"
        path.write_text(json.dumps(manifest))
        with pytest.raises(ManifestParseError):
            load_corpus(path)

    def test_session_failures_collected_together(self, tmp_path):
        path = write_corpus(
            tmp_path,
            [("s1", "u1", "hi there"), ("s2", "u1", "ok then"), ("s3", "u1", "fine")],
        )
        # break two keylogs in different ways
        (tmp_path / "keylogs" / "s1.csv").write_text(f"{CSV_V1_HEADER}\n0,a,5,1\n")
        (tmp_path / "keylogs" / "s2.csv").write_text(f"{CSV_V1_HEADER}\nbad row\n")
        with pytest.raises(SessionLoadError) as err:
            load_corpus(path)
        assert sorted(sid for sid, _ in err.value.failures) == ["s1", "s2"]

    def test_short_session_warns_but_loads(self, tmp_path, caplog):
        path = write_corpus(tmp_path, [("s1", "u1", "tiny text")])
        with caplog.at_level("WARNING"):
            corpus = load_corpus(path)
        assert corpus.sessions["s1"].warning_short is True
        assert any("s1" in r.message for r in caplog.records)

    def test_load_idempotence(self, tmp_path):
        path = write_corpus(
            tmp_path,
            [("s1", "u1", "the cat sat on the mat"), ("s2", "u1", "a dog ran off")],
        )
        a = load_corpus(path)
        b = load_corpus(path)
        for sid in a.sessions:
            xa, xb = a.sessions[sid].analysis, b.sessions[sid].analysis
            assert xa.final_text == xb.final_text
            assert xa.token_texts == xb.token_texts
            assert list(xa.rate_z) == list(xb.rate_z)
            assert list(xa.resampled) == list(xb.resampled)

    def test_zscores_span_typist_sessions(self, tmp_path):
        path = write_corpus(
            tmp_path,
            [("s1", "u1", "aa bb cc dd"), ("s2", "u1", "ee ff gg hh")],
        )
        corpus = load_corpus(path)
        import numpy as np

        zs = np.concatenate(
            [corpus.sessions[s].analysis.rate_z for s in ("s1", "s2")]
        )
        assert abs(zs.mean()) < 1e-9
        assert abs(zs.std(ddof=1) - 1.0) < 1e-9 or np.all(zs == 0)

    def test_word_index(self, tmp_path):
        path = write_corpus(
            tmp_path,
            [("s1", "u1", "the cat the"), ("s2", "u1", "the dog")],
        )
        corpus = load_corpus(path)
        assert corpus.word_index["the"] == [("s1", 0), ("s1", 2), ("s2", 0)]
        assert corpus.word_index["dog"] == [("s2", 1)]


class TestFilterTokens:
    @pytest.fixture()
    def session(self, tmp_path):
        path = write_corpus(tmp_path, [("s1", "u1", "the cat ran fast today")])
        return load_corpus(path).sessions["s1"]

    def test_identity_filter(self, session):
        tokens = filter_tokens(session)
        assert [t.text for t in tokens] == ["the", "cat", "ran", "fast", "today"]

    def test_partition_property(self, session):
        fn = filter_tokens(session, semantic_filter=SemanticFilter.FUNCTION)
        ct = filter_tokens(session, semantic_filter=SemanticFilter.CONTENT)
        assert len(fn) + len(ct) == session.analysis.token_count
        assert {t.token_index for t in fn}.isdisjoint(t.token_index for t in ct)

    def test_pos_filter_verb(self, session):
        verbs = filter_tokens(session, pos_filter={PosTag.VERB})
        assert [t.text for t in verbs] == ["ran"]

    def test_combined_filters_are_subsequences(self, session):
        full = [t.token_index for t in filter_tokens(session)]
        sub = [
            t.token_index
            for t in filter_tokens(
                session, pos_filter={PosTag.NOUN, PosTag.ADJ},
                semantic_filter=SemanticFilter.CONTENT,
            )
        ]
        it = iter(full)
        assert all(i in it for i in sub)


def test_cognitive_load_labels_complete():
    assert {l.value for l in CognitiveLoad} == {
        "REMEMBER", "UNDERSTAND", "APPLY", "ANALYZE", "EVALUATE", "CREATE",
    }
