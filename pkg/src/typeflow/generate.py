"""Deterministic synthetic corpus generator.

Substitutes for a real collected dataset: emits a manifest plus CSV_V1
keylogs that are byte-identical for a fixed (config, seed) pair. Word-initial
keydown gaps are drawn with a configurable inflation factor so first-character
pause structure is reproducible, and revisions are injected as
wrong-key/Backspace/correct-key sequences.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import polars as pl

from .corpus import CognitiveLoad
from .errors import InvalidConfigError
from .wordlist import WORDS

_LETTERS = "abcdefghijklmnopqrstuvwxyz"
_SPACE = 32
_BACKSPACE = -1
_PERIOD = ord(".")


def _default_load_weights() -> dict[str, float]:
    return {load.value: 1.0 for load in CognitiveLoad}


@dataclass(frozen=True)
class GeneratorConfig:
    typist_count: int = 4
    sessions_per_typist: int = 3
    words_per_session: int = 80
    # Typist base rates (chars/sec) are spread evenly over this range;
    # typist 0 always gets the minimum, making it the designated slow typist.
    base_rate_cps: tuple[float, float] = (2.5, 7.0)
    word_initial_pause_factor: float = 2.0
    revision_probability: float = 0.08
    l1_weights: dict[str, float] = field(
        default_factory=lambda: {"English": 0.7, "Russian": 0.15, "Mandarin": 0.15}
    )
    cognitive_load_weights: dict[str, float] = field(
        default_factory=_default_load_weights
    )
    question_pool_size: int = 12
    dwell_ms_range: tuple[int, int] = (40, 120)

    def validate(self) -> None:
        if self.typist_count <= 0 or self.sessions_per_typist <= 0:
            raise InvalidConfigError("typist and session counts must be positive")
        if self.words_per_session <= 0 or self.question_pool_size <= 0:
            raise InvalidConfigError("word and question counts must be positive")
        lo, hi = self.base_rate_cps
        if lo <= 0 or hi < lo:
            raise InvalidConfigError("base_rate_cps must be a positive (min, max)")
        if self.word_initial_pause_factor <= 0:
            raise InvalidConfigError("word_initial_pause_factor must be positive")
        if not 0.0 <= self.revision_probability <= 1.0:
            raise InvalidConfigError("revision_probability must be within [0, 1]")
        for name, weights in (
            ("l1_weights", self.l1_weights),
            ("cognitive_load_weights", self.cognitive_load_weights),
        ):
            if not weights or any(w < 0 for w in weights.values()):
                raise InvalidConfigError(f"{name} must be non-empty and non-negative")
            if sum(weights.values()) <= 0:
                raise InvalidConfigError(f"{name} must have positive total weight")
        bad = set(self.cognitive_load_weights) - {l.value for l in CognitiveLoad}
        if bad:
            raise InvalidConfigError(f"unknown cognitive_load labels: {sorted(bad)}")
        if self.dwell_ms_range[0] <= 0 or self.dwell_ms_range[1] < self.dwell_ms_range[0]:
            raise InvalidConfigError("dwell_ms_range must be a positive (min, max)")

    @classmethod
    def from_dict(cls, data: dict) -> "GeneratorConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise InvalidConfigError(f"unknown config fields: {sorted(unknown)}")
        coerced = dict(data)
        for key in ("base_rate_cps", "dwell_ms_range"):
            if key in coerced:
                coerced[key] = tuple(coerced[key])
        cfg = cls(**coerced)
        cfg.validate()
        return cfg


def _zipf_weights(n: int) -> np.ndarray:
    w = 1.0 / np.arange(1, n + 1)
    return w / w.sum()


def _session_events(
    rng: np.random.Generator, config: GeneratorConfig, rate_cps: float
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Build (codes, keydown, keyup) for one session."""
    word_ids = rng.choice(
        len(WORDS), size=config.words_per_session, p=_zipf_weights(len(WORDS))
    )
    revise = rng.random(config.words_per_session) < config.revision_probability
    codes: list[int] = []
    initial: list[bool] = []  # True when the key lands at word position 0

    for w, do_revise in zip(word_ids, revise):
        word = WORDS[w]
        rev_at = int(rng.integers(0, len(word))) if do_revise else -1
        for j, ch in enumerate(word):
            if j == rev_at:
                wrong = _LETTERS[int(rng.integers(0, 26))]
                codes.append(ord(wrong))
                initial.append(j == 0)
                codes.append(_BACKSPACE)
                initial.append(False)
            codes.append(ord(ch))
            initial.append(j == 0)
        codes.append(_SPACE)
        initial.append(False)
    codes[-1] = _PERIOD  # close the session instead of a trailing space

    n = len(codes)
    base_gap = 1000.0 / rate_cps
    gaps = base_gap * rng.uniform(0.7, 1.3, size=n)
    gaps[np.array(initial)] *= config.word_initial_pause_factor
    keydown = np.cumsum(np.maximum(gaps.astype(np.int64), 1))
    dwell = rng.integers(
        config.dwell_ms_range[0], config.dwell_ms_range[1] + 1, size=n
    )
    return np.array(codes, dtype=np.int32), keydown, keydown + dwell


_KEY_LABELS = {_SPACE: "Space", _BACKSPACE: "Backspace"}


def _write_keylog(path: Path, codes: np.ndarray, keydown: np.ndarray, keyup: np.ndarray) -> None:
    labels = [_KEY_LABELS.get(int(c)) or chr(int(c)) for c in codes]
    frame = pl.DataFrame(
        {
            "index": np.arange(len(codes), dtype=np.int64),
            "key": labels,
            "keydown_ms": keydown,
            "keyup_ms": keyup,
        }
    )
    frame.write_csv(path)


def generate_synthetic(
    config: GeneratorConfig, seed: int, out_dir: str | Path
) -> Path:
    """Write a synthetic corpus tree and return the manifest path.

    The output is a pure function of (config, seed): identical inputs produce
    byte-identical trees.
    """
    config.validate()
    out = Path(out_dir)
    (out / "keylogs").mkdir(parents=True, exist_ok=True)

    root_seq = np.random.SeedSequence(seed)
    meta_rng = np.random.default_rng(root_seq.spawn(1)[0])

    l1_names = sorted(config.l1_weights)
    l1_p = np.array([config.l1_weights[k] for k in l1_names], dtype=np.float64)
    l1_p /= l1_p.sum()
    load_names = sorted(config.cognitive_load_weights)
    load_p = np.array(
        [config.cognitive_load_weights[k] for k in load_names], dtype=np.float64
    )
    load_p /= load_p.sum()

    questions = [f"q{k:02d}" for k in range(config.question_pool_size)]
    question_load = {
        q: load_names[int(meta_rng.choice(len(load_names), p=load_p))]
        for q in questions
    }

    rates = np.linspace(
        config.base_rate_cps[0], config.base_rate_cps[1], config.typist_count
    )
    typists = []
    for ti in range(config.typist_count):
        typists.append(
            {
                "typist_id": f"t{ti:03d}",
                "age": int(meta_rng.integers(18, 46)),
                "gender": ["female", "male", "nonbinary"][
                    int(meta_rng.choice(3, p=[0.45, 0.45, 0.1]))
                ],
                "l1": l1_names[int(meta_rng.choice(len(l1_names), p=l1_p))],
                "handedness": ["RIGHT", "LEFT"][int(meta_rng.random() < 0.11)],
            }
        )

    sessions = []
    session_seqs = root_seq.spawn(config.typist_count * config.sessions_per_typist)
    k = 0
    for ti in range(config.typist_count):
        for si in range(config.sessions_per_typist):
            rng = np.random.default_rng(session_seqs[k])
            k += 1
            sid = f"t{ti:03d}s{si:02d}"
            codes, keydown, keyup = _session_events(rng, config, float(rates[ti]))
            _write_keylog(out / "keylogs" / f"{sid}.csv", codes, keydown, keyup)
            question = questions[int(rng.integers(0, len(questions)))]
            sessions.append(
                {
                    "session_id": sid,
                    "typist_id": f"t{ti:03d}",
                    "question_id": question,
                    "cognitive_load": question_load[question],
                    "keylog_file": f"keylogs/{sid}.csv",
                }
            )

    manifest_path = out / "manifest.json"
    manifest_path.write_text(
        json.dumps({"typists": typists, "sessions": sessions}, indent=2, sort_keys=True)
        + "\n",
        "utf-8",
    )
    return manifest_path
