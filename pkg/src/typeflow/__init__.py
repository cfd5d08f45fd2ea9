"""typeflow: analytics for linguistic patterns in keystroke timing.

Reconstructs typed text from raw keylog events, segments word tokens with
timing and revision data, annotates them linguistically, and serves word- and
character-level comparisons against cohort trends over an HTTP JSON API.
"""

from ._kernel import BACKEND as KERNEL_BACKEND
from .annotate import (
    Annotation,
    Annotator,
    ExternalCommandAnnotator,
    LexiconSuffixTagger,
    PosTag,
    SemanticClass,
    classify_semantic,
    tag_default,
)
from .corpus import (
    CognitiveLoad,
    Corpus,
    Handedness,
    SemanticFilter,
    SessionRecord,
    TypistProfile,
    filter_tokens,
    load_corpus,
)
from .generate import GeneratorConfig, generate_synthetic
from .keylog import (
    KeyEvent,
    KeyEventStream,
    KeylogFormat,
    normalize_key_symbol,
    parse_keylog,
    serialize_keylog,
)
from .metrics import (
    BoxplotStats,
    SessionCurve,
    boxplot_stats,
    char_pauses,
    cumulative_curve,
    normalize_time,
    token_rate,
    zscore_rates,
)
from .pipeline import AnnotationMemo, SessionAnalysis, analyze_stream
from .replay import (
    EditAction,
    EditKind,
    ReplayResult,
    TokenSpan,
    apply_edits,
    attribute_events,
    replay,
    tokenize,
)
from .service import CorpusStore, create_app
from .trends import (
    GRID,
    TREND_GRID_POINTS,
    TrendKind,
    TrendSelector,
    TrendSeries,
    group_trend,
    resample_curve,
)

__version__ = "0.1.0"
