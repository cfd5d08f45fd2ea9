"""Cohort trend lines: mean cumulative-keystroke curves on a shared grid."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

import numpy as np

from .errors import EmptyGroupError
from .metrics import SessionCurve

if TYPE_CHECKING:
    from .corpus import Corpus

# Shared normalized-time grid. 101 points balances fidelity and payload size.
TREND_GRID_POINTS = 101
GRID: np.ndarray = np.linspace(0.0, 1.0, TREND_GRID_POINTS)


class TrendKind(Enum):
    ALL_TYPISTS = "all_typists"
    SAME_USER = "same_user"
    SAME_QUESTION = "same_question"
    SAME_L1 = "same_l1"
    SAME_COGNITIVE_LOAD = "same_cognitive_load"


@dataclass(frozen=True)
class TrendSelector:
    kind: TrendKind
    anchor_session: str


@dataclass(frozen=True)
class TrendSeries:
    grid: np.ndarray
    mean_counts: np.ndarray
    session_count: int
    selector: TrendSelector


def resample_curve(curve: SessionCurve, grid: np.ndarray = GRID) -> np.ndarray:
    """Right-continuous step resampling of a session curve onto a grid.

    The value at grid point g is the cumulative count of the last curve point
    with t_norm <= g, except at g = 0 where it is pinned to 0 (the first
    keydown itself sits at normalized time 0.0).
    """
    idx = np.searchsorted(curve.t_norm, grid, side="right") - 1
    values = curve.counts[idx]
    values[grid == 0.0] = 0
    return values


def group_sessions(corpus: "Corpus", selector: TrendSelector) -> list[str]:
    """Session ids matched by a selector (anchor included), corpus order."""
    anchor = corpus.sessions.get(selector.anchor_session)
    if anchor is None:
        raise EmptyGroupError(
            f"anchor session {selector.anchor_session!r} not in corpus"
        )
    kind = selector.kind
    if kind is TrendKind.ALL_TYPISTS:
        return list(corpus.sessions)
    if kind is TrendKind.SAME_USER:
        return [
            sid for sid, rec in corpus.sessions.items()
            if rec.typist_id == anchor.typist_id
        ]
    if kind is TrendKind.SAME_QUESTION:
        return [
            sid for sid, rec in corpus.sessions.items()
            if rec.question_id == anchor.question_id
        ]
    if kind is TrendKind.SAME_L1:
        anchor_l1 = corpus.typists[anchor.typist_id].l1
        return [
            sid for sid, rec in corpus.sessions.items()
            if corpus.typists[rec.typist_id].l1 == anchor_l1
        ]
    if kind is TrendKind.SAME_COGNITIVE_LOAD:
        return [
            sid for sid, rec in corpus.sessions.items()
            if rec.cognitive_load == anchor.cognitive_load
        ]
    raise ValueError(f"unhandled trend kind: {kind}")


def group_trend(corpus: "Corpus", selector: TrendSelector) -> TrendSeries:
    """Pointwise mean of the resampled curves of every matched session."""
    matched = group_sessions(corpus, selector)
    if not matched:
        raise EmptyGroupError(f"selector {selector} matched no session")
    stack = np.stack([corpus.sessions[sid].analysis.resampled for sid in matched])
    return TrendSeries(
        grid=GRID,
        mean_counts=stack.mean(axis=0),
        session_count=len(matched),
        selector=selector,
    )
