"""Published JSON Schemas for every API payload.

Served under /schema/{name}; the contract suite validates live responses
against these documents, so they are the single source of truth for the wire
format.
"""

from __future__ import annotations

_DRAFT = "https://json-schema.org/draft/2020-12/schema"

_POS_TAGS = [
    "NOUN", "VERB", "ADJ", "ADV", "PRON", "DET", "ADP",
    "CONJ", "AUX", "NUM", "PRT", "INTJ", "X",
]
_SEMANTIC = ["FUNCTION", "CONTENT"]
_LOADS = ["REMEMBER", "UNDERSTAND", "APPLY", "ANALYZE", "EVALUATE", "CREATE"]
_TREND_KINDS = [
    "all_typists", "same_user", "same_question", "same_l1", "same_cognitive_load",
]

_FRACTION = {"type": "number", "minimum": 0.0, "maximum": 1.0}

_TYPIST_SUMMARY = {
    "type": "object",
    "properties": {
        "typist_id": {"type": "string"},
        "age": {"type": ["integer", "null"]},
        "gender": {"type": ["string", "null"]},
        "l1": {"type": "string"},
        "handedness": {"enum": ["LEFT", "RIGHT", None]},
        "session_count": {"type": "integer", "minimum": 0},
    },
    "required": ["typist_id", "age", "gender", "l1", "handedness", "session_count"],
    "additionalProperties": False,
}

TYPIST_LIST_SCHEMA = {
    "$schema": _DRAFT,
    "$id": "typeflow:typist_list",
    "title": "Typist directory",
    "type": "array",
    "items": _TYPIST_SUMMARY,
}

_SESSION_SUMMARY = {
    "type": "object",
    "properties": {
        "session_id": {"type": "string"},
        "question_id": {"type": "string"},
        "cognitive_load": {"enum": _LOADS},
        "total_keystrokes": {"type": "integer", "minimum": 0},
        "token_count": {"type": "integer", "minimum": 0},
        "warning_short": {"type": "boolean"},
    },
    "required": [
        "session_id", "question_id", "cognitive_load",
        "total_keystrokes", "token_count", "warning_short",
    ],
    "additionalProperties": False,
}

SESSION_LIST_SCHEMA = {
    "$schema": _DRAFT,
    "$id": "typeflow:session_list",
    "title": "Sessions of one typist",
    "type": "array",
    "items": _SESSION_SUMMARY,
}

_TREND_SERIES = {
    "type": "object",
    "properties": {
        "kind": {"enum": _TREND_KINDS},
        "anchor_session": {"type": "string"},
        "session_count": {"type": "integer", "minimum": 1},
        "grid": {"type": "array", "items": _FRACTION, "minItems": 101, "maxItems": 101},
        "mean_counts": {
            "type": "array",
            "items": {"type": "number", "minimum": 0},
            "minItems": 101,
            "maxItems": 101,
        },
    },
    "required": ["kind", "anchor_session", "session_count", "grid", "mean_counts"],
    "additionalProperties": False,
}

_PLOT_POINT = {
    "type": "object",
    "properties": {
        "token_index": {"type": "integer", "minimum": 0},
        "text": {"type": "string", "minLength": 1},
        "t_norm_end": _FRACTION,
        "cumulative_count": {"type": "integer", "minimum": 1},
        "rate_z": {"type": "number"},
        "revision_count": {"type": "integer", "minimum": 0},
        "pos": {"enum": _POS_TAGS},
        "semantic_class": {"enum": _SEMANTIC},
    },
    "required": [
        "token_index", "text", "t_norm_end", "cumulative_count",
        "rate_z", "revision_count", "pos", "semantic_class",
    ],
    "additionalProperties": False,
}

PLOT_SCHEMA = {
    "$schema": _DRAFT,
    "$id": "typeflow:plot",
    "title": "Session plot payload",
    "type": "object",
    "properties": {
        "session_id": {"type": "string"},
        "session_meta": {
            "type": "object",
            "properties": {
                "typist": _TYPIST_SUMMARY,
                "question_id": {"type": "string"},
                "cognitive_load": {"enum": _LOADS},
                "total_keystrokes": {"type": "integer", "minimum": 0},
                "token_count": {"type": "integer", "minimum": 0},
                "final_char_count": {"type": "integer", "minimum": 0},
                "warning_short": {"type": "boolean"},
            },
            "required": [
                "typist", "question_id", "cognitive_load", "total_keystrokes",
                "token_count", "final_char_count", "warning_short",
            ],
            "additionalProperties": False,
        },
        "points": {"type": "array", "items": _PLOT_POINT},
        "trends": {"type": "array", "items": _TREND_SERIES},
    },
    "required": ["session_id", "session_meta", "points", "trends"],
    "additionalProperties": False,
}

_BOXPLOT_STATS = {
    "type": "object",
    "properties": {
        "median": {"type": "number"},
        "q1": {"type": "number"},
        "q3": {"type": "number"},
        "whisker_low": {"type": "number"},
        "whisker_high": {"type": "number"},
        "outliers": {"type": "array", "items": {"type": "number"}},
        "n": {"type": "integer", "minimum": 1},
    },
    "required": ["median", "q1", "q3", "whisker_low", "whisker_high", "outliers", "n"],
    "additionalProperties": False,
}

TOKEN_DETAIL_SCHEMA = {
    "$schema": _DRAFT,
    "$id": "typeflow:token_detail",
    "title": "Character-level token detail",
    "type": "object",
    "properties": {
        "token_text": {"type": "string", "minLength": 1},
        "observed": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "position": {"type": "integer", "minimum": 0},
                    "char": {"type": "string", "minLength": 1, "maxLength": 1},
                    "pause_ms": {"type": ["integer", "null"]},
                },
                "required": ["position", "char", "pause_ms"],
                "additionalProperties": False,
            },
        },
        "population": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "position": {"type": "integer", "minimum": 0},
                    "char": {"type": "string", "minLength": 1, "maxLength": 1},
                    "stats": {"oneOf": [_BOXPLOT_STATS, {"type": "null"}]},
                },
                "required": ["position", "char", "stats"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["token_text", "observed", "population"],
    "additionalProperties": False,
}

HEALTHZ_SCHEMA = {
    "$schema": _DRAFT,
    "$id": "typeflow:healthz",
    "title": "Service health",
    "type": "object",
    "properties": {
        "status": {"enum": ["ok", "no_corpus"]},
        "corpus_version": {"type": "integer", "minimum": 0},
        "session_count": {"type": "integer", "minimum": 0},
    },
    "required": ["status", "corpus_version", "session_count"],
    "additionalProperties": False,
}

ERROR_SCHEMA = {
    "$schema": _DRAFT,
    "$id": "typeflow:error",
    "title": "Structured error body",
    "type": "object",
    "properties": {
        "error": {
            "type": "object",
            "properties": {
                "code": {"type": "string"},
                "message": {"type": "string"},
                "offender": {"type": ["string", "null"]},
            },
            "required": ["code", "message"],
            "additionalProperties": False,
        }
    },
    "required": ["error"],
    "additionalProperties": False,
}

SCHEMAS: dict[str, dict] = {
    "typist_list": TYPIST_LIST_SCHEMA,
    "session_list": SESSION_LIST_SCHEMA,
    "plot": PLOT_SCHEMA,
    "token_detail": TOKEN_DETAIL_SCHEMA,
    "healthz": HEALTHZ_SCHEMA,
    "error": ERROR_SCHEMA,
}
