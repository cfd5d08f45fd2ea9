"""Part-of-speech and function/content annotation.

The default tagger is a three-stage lexicon + suffix-rule system: closed-class
lookup, open-class suffix heuristics, then a noun fallback. It is intentionally
lightweight; deployments can plug any tagger satisfying the
:class:`Annotator` interface, including external processes speaking the
line-exchange format handled by :class:`ExternalCommandAnnotator`.
"""

from __future__ import annotations

import subprocess
from dataclasses import dataclass
from enum import Enum
from typing import Protocol, Sequence

from .errors import AnnotatorProtocolError


class PosTag(Enum):
    NOUN = "NOUN"
    VERB = "VERB"
    ADJ = "ADJ"
    ADV = "ADV"
    PRON = "PRON"
    DET = "DET"
    ADP = "ADP"
    CONJ = "CONJ"
    AUX = "AUX"
    NUM = "NUM"
    PRT = "PRT"
    INTJ = "INTJ"
    X = "X"


class SemanticClass(Enum):
    FUNCTION = "FUNCTION"
    CONTENT = "CONTENT"


# Closed classes whose members are function words by definition.
FUNCTION_POS = frozenset(
    {PosTag.PRON, PosTag.DET, PosTag.ADP, PosTag.CONJ, PosTag.AUX, PosTag.PRT}
)


@dataclass(frozen=True)
class Annotation:
    pos: PosTag
    semantic_class: SemanticClass


class Annotator(Protocol):
    """Anything that maps an ordered token-text list to annotations 1:1."""

    def tag(self, token_texts: Sequence[str]) -> list[Annotation]: ...


# ---------------------------------------------------------------------------
# Shipped closed-class lexicon

_DET = """the a an this that these those each every either neither some any no
another such both all half several many much few little own same other next
last which what whose""".split()

_PRON = """i you he she it we they me him her us them my your his its our
their mine yours hers ours theirs myself yourself himself herself itself
ourselves yourselves themselves who whom someone anyone everyone nobody
somebody anybody everybody something anything everything nothing one""".split()

_ADP = """of in to for with on at by from about into over after under between
through during before above below around among against without within near
off across behind beyond beside despite except inside outside onto upon
toward towards until since via per""".split()

_CONJ = """and or but nor so yet because although though while whereas if
unless when whenever where wherever as than whether""".split()

_AUX = """am is are was were be been being have has had having do does did
will would shall should may might must can could ought""".split()

_PRT = """not n't to up down out away back""".split()

_ADV = """very too also just now then here there always never often sometimes
again soon already still almost quite rather really well even only however
perhaps maybe instead together anywhere everywhere nowhere somewhere today
tomorrow yesterday""".split()

_INTJ = """oh hey wow ah hmm yeah yes hello hi ouch oops""".split()

# Small open-class exception list: frequent words the suffix rules mis-shoot.
_VERB = """ran run runs go goes went gone said say says made make took take
got get gets gave give came come saw see seen know knew known think thought
found find told tell felt feel kept keep began begin brought bring wrote
write written read ate eat spoke speak stood stand sat sit won win lost lose
paid pay met meet sent send built build spent spend heard hear held hold
meant mean set put let cut hit became become left stop stops grew grow shown
show chose choose drove drive flew fly drew draw wore wear sold sell taught
teach caught catch bought buy fought fight sought seek threw throw smack""".split()

_ADJ = """good bad big small red fast slow new old high low hot cold long
short hard easy early late young free full great right sure true wrong happy
sad rich poor strong weak dark light deep wide thin thick clean dirty safe
cheap dear busy quiet loud""".split()

_NOUN = """time year people way day man woman child world life hand part eye
place work week case point government company number group problem fact mug
home water room mother father money story month lot book job word business
issue side kind head house friend hour game line end member law car city name
team minute idea body information question movie tuition student university
school cat dog""".split()


def _build_lexicon() -> dict[str, PosTag]:
    lex: dict[str, PosTag] = {}
    # Later entries never override earlier ones: closed classes win.
    for words, tag in (
        (_DET, PosTag.DET),
        (_PRON, PosTag.PRON),
        (_ADP, PosTag.ADP),
        (_CONJ, PosTag.CONJ),
        (_AUX, PosTag.AUX),
        (_PRT, PosTag.PRT),
        (_ADV, PosTag.ADV),
        (_INTJ, PosTag.INTJ),
        (_VERB, PosTag.VERB),
        (_ADJ, PosTag.ADJ),
        (_NOUN, PosTag.NOUN),
    ):
        for w in words:
            lex.setdefault(w, tag)
    return lex


LEXICON: dict[str, PosTag] = _build_lexicon()

# Explicit function-word list: closed-class lexicon entries. Overrides any
# pos-derived class, whichever annotator produced the tag.
FUNCTION_WORDS: frozenset[str] = frozenset(
    w
    for w, tag in LEXICON.items()
    if tag in FUNCTION_POS
)

_SUFFIX_RULES: tuple[tuple[str, PosTag], ...] = (
    ("ly", PosTag.ADV),
    ("ing", PosTag.VERB),
    ("ed", PosTag.VERB),
    ("ize", PosTag.VERB),
    ("tion", PosTag.NOUN),
    ("ness", PosTag.NOUN),
    ("ment", PosTag.NOUN),
    ("er", PosTag.NOUN),
    ("ous", PosTag.ADJ),
    ("ful", PosTag.ADJ),
    ("able", PosTag.ADJ),
    ("ive", PosTag.ADJ),
)


def classify_semantic(token_text: str, pos: PosTag) -> SemanticClass:
    """Function/content split: closed-class tags and explicit function words
    are FUNCTION, everything else CONTENT."""
    if token_text.lower() in FUNCTION_WORDS or pos in FUNCTION_POS:
        return SemanticClass.FUNCTION
    return SemanticClass.CONTENT


def _tag_word(word: str) -> PosTag:
    hit = LEXICON.get(word)
    if hit is not None:
        return hit
    if word.isdigit():
        return PosTag.NUM
    for suffix, tag in _SUFFIX_RULES:
        # Require at least two stem characters so "bed" stays a noun.
        if len(word) >= len(suffix) + 2 and word.endswith(suffix):
            return tag
    return PosTag.NOUN


def tag_default(token_texts: Sequence[str]) -> list[Annotation]:
    """Annotate token texts with the built-in lexicon/suffix tagger."""
    out = []
    for text in token_texts:
        word = text.lower()
        pos = _tag_word(word)
        out.append(Annotation(pos, classify_semantic(word, pos)))
    return out


class LexiconSuffixTagger:
    """Default annotator wrapping :func:`tag_default`."""

    def tag(self, token_texts: Sequence[str]) -> list[Annotation]:
        return tag_default(token_texts)


# ---------------------------------------------------------------------------
# External annotator line exchange: one token per line in, token<TAB>POS out.


def encode_exchange(token_texts: Sequence[str]) -> str:
    return "\n".join(token_texts) + "\n" if token_texts else ""


def decode_exchange(payload: str, token_texts: Sequence[str]) -> list[Annotation]:
    lines = [ln for ln in payload.split("\n") if ln != ""]
    if len(lines) != len(token_texts):
        raise AnnotatorProtocolError(
            f"expected {len(token_texts)} tagged lines, got {len(lines)}"
        )
    out = []
    for lineno, (line, text) in enumerate(zip(lines, token_texts)):
        token, sep, tag_name = line.partition("\t")
        if not sep:
            raise AnnotatorProtocolError(f"line {lineno}: missing tab separator")
        if token != text:
            raise AnnotatorProtocolError(
                f"line {lineno}: token {token!r} does not match input {text!r}"
            )
        try:
            pos = PosTag[tag_name.strip().upper()]
        except KeyError:
            raise AnnotatorProtocolError(
                f"line {lineno}: unknown part-of-speech tag {tag_name!r}"
            ) from None
        out.append(Annotation(pos, classify_semantic(text, pos)))
    return out


class ExternalCommandAnnotator:
    """Runs a third-party tagger process over the line-exchange format."""

    def __init__(self, argv: Sequence[str], timeout_s: float = 60.0) -> None:
        self.argv = list(argv)
        self.timeout_s = timeout_s

    def tag(self, token_texts: Sequence[str]) -> list[Annotation]:
        if not token_texts:
            return []
        proc = subprocess.run(
            self.argv,
            input=encode_exchange(token_texts),
            capture_output=True,
            text=True,
            timeout=self.timeout_s,
        )
        if proc.returncode != 0:
            raise AnnotatorProtocolError(
                f"annotator exited with status {proc.returncode}: {proc.stderr.strip()}"
            )
        return decode_exchange(proc.stdout, token_texts)
