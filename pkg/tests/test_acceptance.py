"""Acceptance suite: one test per release criterion.

Each test name appears with PASS/FAIL in the terminal summary (see
conftest). Tolerances are pinned here and nowhere else.
"""

from __future__ import annotations

import json
import random
import resource
import statistics
import time

import jsonschema
import numpy as np
import pytest
from fastapi.testclient import TestClient

from typeflow.corpus import load_corpus
from typeflow.generate import GeneratorConfig, generate_synthetic
from typeflow.keylog import KeyEventStream
from typeflow.metrics import boxplot_stats, pause_sequence, zscore_rates
from typeflow.pipeline import analyze_stream
from typeflow.replay import replay
from typeflow.schemas import SCHEMAS
from typeflow.service import CorpusStore, create_app
from typeflow.trends import GRID, TrendKind, TrendSelector, group_trend

from .oracles import brute_boxplot, brute_resample, naive_replay

# ---------------------------------------------------------------------------
# Criterion: replay oracle equivalence
# 10,000 randomized streams (length <= 200, char/Backspace/Delete/arrow mix);
# final text must match the naive gap-buffer oracle byte for byte in < 10 s.

_FUZZ_KEYS = (
    [(c, ord(c)) for c in "abcdefghijklmnopqrst.,'-"]
    + [("Space", 32)]
    + [
        ("Backspace", -1),
        ("Delete", -2),
        ("Left", -3),
        ("Right", -4),
        ("Home", -5),
        ("End", -6),
        ("Shift", -7),
    ]
)
_FUZZ_NAMES = [name for name, _ in _FUZZ_KEYS]
_FUZZ_CODES = np.array([code for _, code in _FUZZ_KEYS], dtype=np.int32)
_FUZZ_P = np.array(
    [0.55 / 24] * 24 + [0.13] + [0.12, 0.05, 0.04, 0.04, 0.02, 0.02, 0.03]
)


def test_replay_oracle_equivalence():
    rng = np.random.default_rng(20240814)
    probs = _FUZZ_P / _FUZZ_P.sum()
    t0 = time.perf_counter()
    checked = 0
    for _ in range(10_000):
        n = int(rng.integers(0, 201))
        idx = rng.choice(len(_FUZZ_CODES), size=n, p=probs)
        codes = _FUZZ_CODES[idx]
        gaps = rng.integers(0, 120, size=n)
        keydown = np.cumsum(gaps)
        stream = KeyEventStream(codes, keydown, keydown + 40)
        got = replay(stream).final_text
        want = naive_replay([_FUZZ_NAMES[j] for j in idx])
        assert got == want
        checked += 1
    elapsed = time.perf_counter() - t0
    assert checked == 10_000
    assert elapsed < 10.0, f"replay oracle suite took {elapsed:.1f}s"


# ---------------------------------------------------------------------------
# Criterion: conservation
# For every generated session: token keystroke sum + orphan bucket equals the
# stream length, and the curve's final value equals the stream length. Exact.


def test_conservation_suite(demo_corpus, tmp_path):
    corpora = [demo_corpus]
    manifest = generate_synthetic(
        GeneratorConfig(
            typist_count=6,
            sessions_per_typist=4,
            words_per_session=50,
            revision_probability=0.25,
        ),
        seed=99,
        out_dir=tmp_path,
    )
    corpora.append(load_corpus(manifest))
    sessions = 0
    for corpus in corpora:
        for rec in corpus.sessions.values():
            a = rec.analysis
            n = len(a.stream)
            assert int(a.tok_keystrokes.sum()) + a.orphan_count == n
            assert int(a.curve.counts[-1]) == n
            sessions += 1
    assert sessions > 0


# ---------------------------------------------------------------------------
# Criterion: z-score normalization
# Per-typist z-scores have mean 0 and sample std 1 within 1e-9 whenever n >= 2
# and variance > 0; degenerate cases return all-zero vectors.


def test_zscore_suite(demo_corpus):
    checked = 0
    for tid in demo_corpus.typists:
        rates = np.concatenate(
            [
                rec.analysis.rate_raw
                for rec in demo_corpus.sessions.values()
                if rec.typist_id == tid
            ]
        )
        zs = np.concatenate(
            [
                rec.analysis.rate_z
                for rec in demo_corpus.sessions.values()
                if rec.typist_id == tid
            ]
        )
        if len(rates) >= 2 and rates.std(ddof=1) > 0:
            assert abs(zs.mean()) < 1e-9
            assert abs(zs.std(ddof=1) - 1.0) < 1e-9
            checked += 1
    assert checked > 0
    assert list(zscore_rates([5.0])) == [0.0]
    assert list(zscore_rates([3.0, 3.0, 3.0])) == [0.0, 0.0, 0.0]
    assert list(zscore_rates([])) == []


# ---------------------------------------------------------------------------
# Criterion: boxplot oracle
# 1,000 random sample sets (sizes 1-500) match the brute-force quartile/fence
# computation to 1e-9.


def test_boxplot_oracle():
    rng = random.Random(77)
    for case in range(1_000):
        n = rng.randint(1, 500)
        if case % 3 == 0:
            samples = [rng.uniform(0, 1000) for _ in range(n)]
        elif case % 3 == 1:
            samples = [rng.gauss(200, 60) for _ in range(n)]
        else:
            samples = [rng.expovariate(1 / 150) for _ in range(n)]
        got = boxplot_stats(samples)
        want = brute_boxplot(samples)
        for field in ("median", "q1", "q3", "whisker_low", "whisker_high"):
            assert abs(getattr(got, field) - want[field]) <= 1e-9, field
        assert len(got.outliers) == len(want["outliers"])
        for a, b in zip(got.outliers, want["outliers"]):
            assert abs(a - b) <= 1e-9
        assert got.n == want["n"]


# ---------------------------------------------------------------------------
# Criterion: trend correctness
# group_trend equals a brute-force mean of independently resampled curves on
# corpora of <= 20 sessions, exactly; a single-session group equals its own
# resampled curve.


def _brute_curve_points(csv_path) -> list[tuple[float, int]]:
    lines = csv_path.read_text().strip().split("\n")[1:]
    keydowns = [int(line.split(",")[2]) for line in lines]
    first, last = keydowns[0], keydowns[-1]
    points = [(0.0, 0)]
    points += [((kd - first) / (last - first), i + 1) for i, kd in enumerate(keydowns)]
    return points


def test_trend_correctness(tmp_path):
    manifest_path = generate_synthetic(
        GeneratorConfig(
            typist_count=4, sessions_per_typist=4, words_per_session=30
        ),
        seed=1234,
        out_dir=tmp_path,
    )
    corpus = load_corpus(manifest_path)
    assert corpus.session_count <= 20
    manifest = json.loads(manifest_path.read_text())
    meta = {s["session_id"]: s for s in manifest["sessions"]}
    l1_of = {t["typist_id"]: t["l1"] for t in manifest["typists"]}

    resampled = {
        sid: brute_resample(
            _brute_curve_points(tmp_path / meta[sid]["keylog_file"]), GRID
        )
        for sid in meta
    }

    def brute_group(anchor: str, kind: TrendKind) -> list[str]:
        a = meta[anchor]
        if kind is TrendKind.ALL_TYPISTS:
            return list(meta)
        if kind is TrendKind.SAME_USER:
            return [s for s, m in meta.items() if m["typist_id"] == a["typist_id"]]
        if kind is TrendKind.SAME_QUESTION:
            return [s for s, m in meta.items() if m["question_id"] == a["question_id"]]
        if kind is TrendKind.SAME_L1:
            return [
                s
                for s, m in meta.items()
                if l1_of[m["typist_id"]] == l1_of[a["typist_id"]]
            ]
        return [
            s for s, m in meta.items() if m["cognitive_load"] == a["cognitive_load"]
        ]

    for anchor in list(meta)[:6]:
        for kind in TrendKind:
            series = group_trend(corpus, TrendSelector(kind, anchor))
            members = brute_group(anchor, kind)
            assert series.session_count == len(members)
            want = [
                sum(resampled[s][g] for s in members) / len(members)
                for g in range(len(GRID))
            ]
            assert list(series.mean_counts) == want, (anchor, kind)

    # single-session group equals its own resampled curve
    solo_manifest = generate_synthetic(
        GeneratorConfig(typist_count=1, sessions_per_typist=1, words_per_session=25),
        seed=5,
        out_dir=tmp_path / "solo",
    )
    solo = load_corpus(solo_manifest)
    (sid,) = solo.sessions
    series = group_trend(solo, TrendSelector(TrendKind.SAME_USER, sid))
    own = solo.sessions[sid].analysis.resampled
    assert list(series.mean_counts) == [float(v) for v in own]


# ---------------------------------------------------------------------------
# Criterion: first-character pause structure
# With word-initial pause inflation 3x, at least 90% of the slow typist's
# multi-character tokens show a first-character pause above that typist's
# median non-initial pause.


def test_first_char_pause_reproduction(tmp_path):
    manifest = generate_synthetic(
        GeneratorConfig(
            typist_count=4,
            sessions_per_typist=3,
            words_per_session=80,
            base_rate_cps=(2.0, 7.5),
            word_initial_pause_factor=3.0,
            revision_probability=0.1,
        ),
        seed=2718,
        out_dir=tmp_path,
    )
    corpus = load_corpus(manifest)
    slow = "t000"  # generator assigns the minimum base rate to typist 0

    non_initial: list[int] = []
    firsts: list[int] = []
    for rec in corpus.sessions.values():
        if rec.typist_id != slow:
            continue
        a = rec.analysis
        for i in range(a.token_count):
            s, e = int(a.token_starts[i]), int(a.token_ends[i])
            if e - s < 2:
                continue
            pauses = pause_sequence(a.provenance[s:e], a.stream.keydown_ms)
            if pauses[0] is not None:
                firsts.append(pauses[0])
            non_initial.extend(pauses[1:])
    assert firsts and non_initial
    threshold = statistics.median(non_initial)
    share = sum(1 for p in firsts if p > threshold) / len(firsts)
    assert share >= 0.90, f"only {share:.1%} of first pauses exceed the median"


# ---------------------------------------------------------------------------
# Criterion: scale target
# Generate and fully ingest a ~10M keystroke corpus in under 60 s and under
# 4 GB resident memory.


def test_scale_target(tmp_path):
    config = GeneratorConfig(
        typist_count=100,
        sessions_per_typist=5,
        words_per_session=4600,
        revision_probability=0.08,
    )
    t0 = time.perf_counter()
    manifest = generate_synthetic(config, seed=31337, out_dir=tmp_path)
    corpus = load_corpus(manifest)
    elapsed = time.perf_counter() - t0
    total = sum(r.analysis.total_keystrokes for r in corpus.sessions.values())
    peak_gb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1e6
    assert total >= 10_000_000, f"corpus too small: {total:,}"
    assert elapsed < 60.0, f"generate+ingest took {elapsed:.1f}s"
    assert peak_gb < 4.0, f"peak resident memory {peak_gb:.2f} GB"


# ---------------------------------------------------------------------------
# Criterion: API contract
# All four endpoints validate against their published JSON schemas on 100
# randomized corpora; 404/400 paths return structured errors. Server-side
# only; no UI involved.


def test_api_contract(tmp_path):
    for trial in range(100):
        rng = random.Random(trial)
        config = GeneratorConfig(
            typist_count=rng.randint(1, 4),
            sessions_per_typist=rng.randint(1, 3),
            words_per_session=rng.randint(15, 45),
            base_rate_cps=(rng.uniform(1.5, 3.0), rng.uniform(4.0, 9.0)),
            word_initial_pause_factor=rng.uniform(1.0, 4.0),
            revision_probability=rng.uniform(0.0, 0.3),
        )
        manifest = generate_synthetic(config, seed=trial, out_dir=tmp_path / str(trial))
        client = TestClient(create_app(CorpusStore(load_corpus(manifest))))

        typists = client.get("/typists")
        assert typists.status_code == 200
        jsonschema.validate(typists.json(), SCHEMAS["typist_list"])

        tid = rng.choice(typists.json())["typist_id"]
        sessions = client.get(f"/typists/{tid}/sessions")
        assert sessions.status_code == 200
        jsonschema.validate(sessions.json(), SCHEMAS["session_list"])

        summary = rng.choice(sessions.json())
        sid = summary["session_id"]
        params = {}
        if rng.random() < 0.5:
            params["pos"] = ",".join(
                rng.sample(["NOUN", "VERB", "ADJ", "ADV", "DET", "PRON"], 2)
            )
        if rng.random() < 0.5:
            params["semantic"] = rng.choice(["function", "content"])
        if rng.random() < 0.8:
            params["trends"] = ",".join(
                rng.sample([k.value for k in TrendKind], rng.randint(1, 5))
            )
        plot = client.get(f"/sessions/{sid}/plot", params=params)
        assert plot.status_code == 200
        jsonschema.validate(plot.json(), SCHEMAS["plot"])

        token_count = summary["token_count"]
        detail = client.get(
            f"/sessions/{sid}/tokens/{rng.randrange(token_count)}/detail"
        )
        assert detail.status_code == 200
        jsonschema.validate(detail.json(), SCHEMAS["token_detail"])

        # structured error paths
        missing = client.get("/sessions/no-such-session/plot")
        assert missing.status_code == 404
        jsonschema.validate(missing.json(), SCHEMAS["error"])
        bad = client.get(f"/sessions/{sid}/plot", params={"pos": "BLORP"})
        assert bad.status_code == 400
        jsonschema.validate(bad.json(), SCHEMAS["error"])
        bad_token = client.get(f"/sessions/{sid}/tokens/999999/detail")
        assert bad_token.status_code == 404
        jsonschema.validate(bad_token.json(), SCHEMAS["error"])
