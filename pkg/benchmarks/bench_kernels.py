#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot paths (CSV parsing, replay, coordinate resolution) on a
synthetic event stream and prints throughput plus speedup.

Usage: python benchmarks/bench_kernels.py [--events N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from typeflow._kernel import pure
from typeflow.keylog import serialize_keylog, KeyEventStream

try:
    from typeflow._kernel import _native as native
except ImportError:
    native = None


def make_stream(n: int, seed: int = 7) -> KeyEventStream:
    """Typing-shaped event mix: mostly insertions, occasional revisions and
    local caret moves (large-jump keys are rare in real sessions)."""
    rng = np.random.default_rng(seed)
    alphabet = np.array(
        [ord(c) for c in "abcdefghijklmnopqrst.'"] + [32, -1, -2, -3, -4, -7],
        dtype=np.int32,
    )
    weights = np.array([0.04] * 22 + [0.06, 0.03, 0.008, 0.005, 0.005, 0.004])
    codes = alphabet[rng.choice(len(alphabet), size=n, p=weights / weights.sum())]
    keydown = np.cumsum(rng.integers(1, 200, size=n))
    return KeyEventStream(codes, keydown, keydown + 50)


def bench(label: str, fn, repeats: int = 3) -> float:
    best = min(timed(fn) for _ in range(repeats))
    print(f"  {label:<28} {best * 1e3:9.1f} ms")
    return best


def timed(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--events", type=int, default=2_000_000)
    args = parser.parse_args()

    stream = make_stream(args.events)
    raw = serialize_keylog(stream)
    body = raw.split(b"\n", 1)[1]
    print(f"stream: {args.events:,} events, {len(raw) / 1e6:.1f} MB CSV")

    results: dict[str, dict[str, float]] = {}
    backends = [("pure", pure)] + ([("native", native)] if native else [])
    for name, backend in backends:
        print(f"{name}:")
        r: dict[str, float] = {}
        r["parse"] = bench("parse_rows", lambda: backend.parse_rows(body))
        out = {}

        def run_replay():
            out["replay"] = backend.replay_events(stream.codes)

        r["replay"] = bench("replay_events", run_replay)
        kinds, positions, anchors, parents, final_ids = out["replay"]
        finalpos = np.full(len(stream), -1, dtype=np.int32)
        finalpos[final_ids] = np.arange(len(final_ids), dtype=np.int32)
        r["resolve"] = bench(
            "resolve_coords",
            lambda: backend.resolve_coords(kinds, anchors, parents, finalpos),
        )
        results[name] = r

    if native:
        print("speedup (pure / native):")
        for stage in ("parse", "replay", "resolve"):
            ratio = results["pure"][stage] / results["native"][stage]
            print(f"  {stage:<28} {ratio:9.1f}x")
    else:
        print("compiled backend unavailable; built only the pure baseline")


if __name__ == "__main__":
    main()
