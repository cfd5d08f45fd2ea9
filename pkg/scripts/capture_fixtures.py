#!/usr/bin/env python3
"""Capture live API payloads into frontend test fixtures.

Generates a deterministic demo corpus, serves it through the in-process test
client, and records the exact request/response pairs the UI exploration test
replays. Keys are "<path>?<query>" with query parameters sorted by name.

Usage: python scripts/capture_fixtures.py [--out frontend/tests/fixtures]
"""

from __future__ import annotations

import argparse
import json
import tempfile
from pathlib import Path
from urllib.parse import urlencode

from fastapi.testclient import TestClient

from typeflow.corpus import load_corpus
from typeflow.generate import GeneratorConfig, generate_synthetic
from typeflow.service import CorpusStore, create_app

SEED = 20240101
CONFIG = GeneratorConfig(
    typist_count=4,
    sessions_per_typist=3,
    words_per_session=80,
    word_initial_pause_factor=2.5,
    revision_probability=0.12,
)


def canonical_key(path: str, params: dict[str, str] | None = None) -> str:
    if not params:
        return path
    return f"{path}?{urlencode(sorted(params.items()))}"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out", default="frontend/tests/fixtures", type=Path, help="output directory"
    )
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    with tempfile.TemporaryDirectory() as tmp:
        manifest = generate_synthetic(CONFIG, seed=SEED, out_dir=tmp)
        corpus = load_corpus(manifest)
        client = TestClient(create_app(CorpusStore(corpus)))

        fixtures: dict[str, object] = {}

        def record(path: str, params: dict[str, str] | None = None) -> object:
            res = client.get(path, params=params)
            assert res.status_code == 200, (path, params, res.status_code)
            body = res.json()
            fixtures[canonical_key(path, params)] = body
            return body

        typists = record("/typists")
        typist_id = typists[0]["typist_id"]
        sessions = record(f"/typists/{typist_id}/sessions")
        session_id = sessions[0]["session_id"]

        plot_path = f"/sessions/{session_id}/plot"
        record(plot_path)
        record(plot_path, {"trends": "all_typists"})
        record(plot_path, {"trends": "all_typists,same_user"})
        filtered = record(
            plot_path, {"pos": "NOUN", "trends": "all_typists,same_user"}
        )
        assert filtered["points"], "expected NOUN tokens in the demo session"

        token_index = filtered["points"][0]["token_index"]
        detail = record(f"/sessions/{session_id}/tokens/{token_index}/detail")
        assert any(o["pause_ms"] is not None for o in detail["observed"])

        scenario = {
            "typist_id": typist_id,
            "session_id": session_id,
            "token_index": token_index,
        }

    (args.out / "api_fixtures.json").write_text(
        json.dumps(fixtures, indent=1, sort_keys=True) + "\n"
    )
    (args.out / "scenario.json").write_text(
        json.dumps(scenario, indent=1, sort_keys=True) + "\n"
    )
    print(f"wrote {len(fixtures)} fixtures to {args.out}")
    print(f"scenario: {scenario}")


if __name__ == "__main__":
    main()
