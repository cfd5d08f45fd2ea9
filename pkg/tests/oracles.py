"""Independent oracles for the main computations.

Deliberately naive implementations kept free of any package kernel code:
a list-based replay simulator, a loop-based quartile/fence computation, and a
scan-based step resampler. Expected values frozen into tests come from these.
"""

from __future__ import annotations

import math
import random

import numpy as np

# Canonical action keys, mirrored here by name only.
ACTIONS = {
    "Backspace": "backspace",
    "Delete": "delete",
    "Left": "left",
    "Right": "right",
    "Home": "home",
    "End": "end",
    "Shift": "noop",
    "Ctrl": "noop",
    "Alt": "noop",
}
INSERT_NAMED = {"Space": " ", "Enter": "\n", "Tab": "\t"}


def naive_replay(keys: list[str]) -> str:
    """Straight list simulation of caret editing; returns final text."""
    buf: list[str] = []
    caret = 0
    for key in keys:
        action = ACTIONS.get(key)
        if action is None:
            ch = INSERT_NAMED.get(key, key)
            buf.insert(caret, ch)
            caret += 1
        elif action == "backspace":
            if caret > 0:
                del buf[caret - 1]
                caret -= 1
        elif action == "delete":
            if caret < len(buf):
                del buf[caret]
        elif action == "left":
            caret = max(0, caret - 1)
        elif action == "right":
            caret = min(len(buf), caret + 1)
        elif action == "home":
            caret = 0
        elif action == "end":
            caret = len(buf)
    return "".join(buf)


def random_key_sequence(rng: random.Random, length: int) -> list[str]:
    """Key mix for replay fuzzing: letters, spaces, deletions, caret moves."""
    keys = []
    for _ in range(length):
        roll = rng.random()
        if roll < 0.55:
            keys.append(rng.choice("abcdefghijklmnopqrstuvwxyz"))
        elif roll < 0.67:
            keys.append("Space")
        elif roll < 0.77:
            keys.append("Backspace")
        elif roll < 0.82:
            keys.append("Delete")
        elif roll < 0.94:
            keys.append(rng.choice(["Left", "Right", "Home", "End"]))
        else:
            keys.append(rng.choice(["Shift", "Ctrl", "Alt", ".", ",", "'", "-"]))
    return keys


def keys_to_stream_rows(
    rng: random.Random, keys: list[str]
) -> list[tuple[str, int, int]]:
    """Attach plausible monotone timings (occasional ties) to a key list."""
    rows = []
    t = rng.randint(0, 1000)
    for key in keys:
        rows.append((key, t, t + rng.randint(0, 200)))
        t += rng.choice([0, 1, 5, 40, 80, 120, 250, 900])
    return rows


def brute_boxplot(samples: list[float]) -> dict:
    """Loop-based Tukey boxplot statistics."""
    xs = sorted(samples)
    n = len(xs)

    def quartile(q: float) -> float:
        pos = (n - 1) * q
        lo = math.floor(pos)
        hi = math.ceil(pos)
        if lo == hi:
            return float(xs[lo])
        return xs[lo] + (pos - lo) * (xs[hi] - xs[lo])

    q1, med, q3 = quartile(0.25), quartile(0.5), quartile(0.75)
    iqr = q3 - q1
    lo_fence, hi_fence = q1 - 1.5 * iqr, q3 + 1.5 * iqr
    inside = [x for x in xs if lo_fence <= x <= hi_fence]
    outliers = [x for x in xs if x < lo_fence or x > hi_fence]
    # Whiskers clamp to the box so the ordering chain always holds.
    return {
        "median": med,
        "q1": q1,
        "q3": q3,
        "whisker_low": min(min(inside), q1),
        "whisker_high": max(max(inside), q3),
        "outliers": outliers,
        "n": n,
    }


def brute_resample(
    points: list[tuple[float, int]], grid: "list[float] | np.ndarray"
) -> list[int]:
    """Scan-based right-continuous step interpolation (0 pinned at g = 0)."""
    out = []
    for g in grid:
        value = 0
        if g > 0:
            for t, c in points:
                if t <= g:
                    value = c
                else:
                    break
        out.append(value)
    return out
