"""Normalized session quantities.

Session-proportional time on 0.0-1.0, cumulative keystroke curves, per-token
typing rates with per-typist z-scores, down-down character pauses, and
boxplot statistics for pause populations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateSessionError,
    EmptySampleError,
    EmptySessionError,
    TimeOutOfRangeError,
)
from .keylog import KeyEventStream
from .replay import TokenSpan


@dataclass(frozen=True)
class SessionCurve:
    """Cumulative keystroke count over normalized session time.

    One point per event at its keydown's normalized time, with a synthetic
    (0.0, 0) anchor first. Normalization runs from the first to the last
    keydown so the final point always sits at 1.0.
    """

    t_norm: np.ndarray
    counts: np.ndarray
    total_keystrokes: int
    session_span_ms: int

    @property
    def points(self) -> list[tuple[float, int]]:
        return [(float(t), int(c)) for t, c in zip(self.t_norm, self.counts)]


@dataclass(frozen=True)
class TokenMetrics:
    token_index: int
    t_norm_start: float
    t_norm_end: float
    rate_raw: float
    rate_z: float
    revision_count: int


@dataclass(frozen=True)
class BoxplotStats:
    median: float
    q1: float
    q3: float
    whisker_low: float
    whisker_high: float
    outliers: list[float] = field(default_factory=list)
    n: int = 0


def normalize_time(t_ms: int, session_start_ms: int, session_end_ms: int) -> float:
    """Rescale a timestamp to the 0.0-1.0 fraction of the session span."""
    if session_end_ms <= session_start_ms:
        raise DegenerateSessionError(
            f"session span [{session_start_ms}, {session_end_ms}] is empty"
        )
    if not session_start_ms <= t_ms <= session_end_ms:
        raise TimeOutOfRangeError(
            f"{t_ms} outside session span [{session_start_ms}, {session_end_ms}]"
        )
    return (t_ms - session_start_ms) / (session_end_ms - session_start_ms)


def cumulative_curve(stream: KeyEventStream) -> SessionCurve:
    """Cumulative keystroke curve of a session (1-based counts per event)."""
    n = len(stream)
    if n == 0:
        raise EmptySessionError("cannot build a curve for an empty stream")
    kd = stream.keydown_ms
    first = int(kd[0])
    last = int(kd[-1])
    if last == first:
        raise DegenerateSessionError("all keydowns coincide; zero-span session")
    t = np.empty(n + 1, dtype=np.float64)
    t[0] = 0.0
    t[1:] = (kd - first) / (last - first)
    counts = np.arange(n + 1, dtype=np.int64)
    span_ms = int(stream.keyup_ms.max()) - first
    return SessionCurve(t, counts, n, span_ms)


def token_rate(token: TokenSpan) -> float:
    """Keystrokes per second over the token's time span.

    A zero span (possible only when every attributed keyup coincides with the
    first keydown, so any sole event has zero duration too) yields 0.0.
    """
    span_ms = token.end_ms - token.start_ms
    if span_ms <= 0:
        return 0.0
    return token.keystroke_count * 1000.0 / span_ms


def zscore_rates(rates: "np.ndarray | list[float]") -> np.ndarray:
    """z-scores over one typist's full token-rate population.

    Uses the sample standard deviation (n-1 divisor); fewer than two samples
    or zero variance yield an all-zero vector.
    """
    r = np.asarray(rates, dtype=np.float64)
    if r.size < 2 or np.all(r == r[0]):
        return np.zeros(r.size)
    # Two-pass centering: mathematically a no-op, but it keeps mean(z) at 0
    # even when the first mean rounds (e.g. three equal-magnitude values).
    d = r - r.mean()
    d -= d.mean()
    s = np.sqrt(np.dot(d, d) / (r.size - 1))
    if s == 0.0:
        return np.zeros(r.size)
    return d / s


def pause_sequence(
    insert_event_indices: "np.ndarray | tuple[int, ...]", keydown_ms: np.ndarray
) -> list[int | None]:
    """Down-down pauses before each surviving character, final-text order.

    The pause before the first character is measured from the immediately
    preceding event in the whole stream, of any kind; None when the character
    came from the very first event.
    """
    ev = list(insert_event_indices)
    out: list[int | None] = []
    for k, e in enumerate(ev):
        if k > 0:
            out.append(int(keydown_ms[e]) - int(keydown_ms[ev[k - 1]]))
        elif e > 0:
            out.append(int(keydown_ms[e]) - int(keydown_ms[e - 1]))
        else:
            out.append(None)
    return out


def char_pauses(
    token: TokenSpan, stream: KeyEventStream
) -> list[tuple[str, int | None]]:
    """Per-character down-down pause for a token (None marks an absent
    first-character pause)."""
    pauses = pause_sequence(token.insert_event_indices, stream.keydown_ms)
    return list(zip(token.text, pauses))


def _quartile(sorted_values: np.ndarray, q: float) -> float:
    # Linear interpolation at position (n-1) * q.
    pos = (len(sorted_values) - 1) * q
    lo = math.floor(pos)
    frac = pos - lo
    if frac == 0.0:
        return float(sorted_values[lo])
    return float(sorted_values[lo] + frac * (sorted_values[lo + 1] - sorted_values[lo]))


def boxplot_stats(samples: "np.ndarray | list[float]") -> BoxplotStats:
    """Tukey boxplot statistics with 1.5 IQR whisker fences."""
    xs = np.sort(np.asarray(samples, dtype=np.float64))
    if xs.size == 0:
        raise EmptySampleError("boxplot over an empty sample set")
    q1 = _quartile(xs, 0.25)
    median = _quartile(xs, 0.5)
    q3 = _quartile(xs, 0.75)
    iqr = q3 - q1
    lo_fence = q1 - 1.5 * iqr
    hi_fence = q3 + 1.5 * iqr
    in_fence = (xs >= lo_fence) & (xs <= hi_fence)
    kept = xs[in_fence]
    # Interpolated quartiles can fall below every in-fence sample on tiny
    # skewed sets; clamp whiskers to the box so the ordering chain
    # whisker_low <= q1 <= median <= q3 <= whisker_high always holds.
    return BoxplotStats(
        median=median,
        q1=q1,
        q3=q3,
        whisker_low=min(float(kept[0]), q1),
        whisker_high=max(float(kept[-1]), q3),
        outliers=[float(v) for v in xs[~in_fence]],
        n=int(xs.size),
    )
