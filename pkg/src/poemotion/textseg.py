"""Rule-based sentence segmentation for poem text.

Splits at terminal punctuation followed by whitespace, with a fixed
abbreviation list suppressing false breaks after tokens like "Mr." or
"e.g.".  Poem lines that carry no terminal punctuation are closed at the
newline, and blank lines always close the current unit, so an unpunctuated
poem still yields one unit per line instead of collapsing into one blob.
"""

from __future__ import annotations

from dataclasses import dataclass

TERMINALS = frozenset(".?!。？！")  # . ? ! 。 ？ ！

# Stored without the trailing period; matched case-insensitively against the
# token preceding a candidate period.
ABBREVIATIONS = frozenset(
    {"mr", "mrs", "dr", "st", "vs", "etc", "e.g", "i.e", "prof", "sr", "jr"}
)


@dataclass(frozen=True)
class Sentence:
    """One sentence-level unit, tied to its source span in the raw text."""

    id: int
    text: str
    char_span: tuple[int, int]


@dataclass(frozen=True)
class Document:
    raw_text: str
    sentences: tuple[Sentence, ...]


def _word_before(text: str, dot: int) -> str:
    """Token immediately preceding ``text[dot]``, scanning letters and
    internal periods so "e.g." resolves to "e.g" rather than "g"."""
    start = dot
    while start > 0 and (text[start - 1].isalpha() or text[start - 1] == "."):
        start -= 1
    return text[start:dot]


def _is_abbreviation(text: str, dot: int) -> bool:
    return _word_before(text, dot).lower() in ABBREVIATIONS


def _rest_of_line_blank(text: str, pos: int) -> bool:
    """True if everything from ``pos`` to the next newline (or EOF) is
    whitespace, i.e. the upcoming line is blank."""
    i = pos
    while i < len(text) and text[i] != "\n":
        if not text[i].isspace():
            return False
        i += 1
    return True


def segment_sentences(raw_text: str) -> Document:
    """Split ``raw_text`` into sentence units.

    Spans index into ``raw_text`` and round-trip exactly; whitespace inside
    a unit is never collapsed.  Empty input yields a document with no
    sentences.
    """
    sentences: list[Sentence] = []
    pending_start: int | None = None
    last_non_ws = -1

    def emit(end: int) -> None:
        nonlocal pending_start
        if pending_start is None:
            return
        span = (pending_start, end)
        sentences.append(
            Sentence(id=len(sentences), text=raw_text[span[0] : span[1]], char_span=span)
        )
        pending_start = None

    n = len(raw_text)
    for i, ch in enumerate(raw_text):
        if not ch.isspace():
            if pending_start is None:
                pending_start = i
            last_non_ws = i

        if ch in TERMINALS and pending_start is not None:
            nxt = raw_text[i + 1] if i + 1 < n else None
            if (nxt is None or nxt.isspace()) and not (
                ch == "." and _is_abbreviation(raw_text, i)
            ):
                emit(i + 1)
        elif ch == "\n" and pending_start is not None:
            # Line-break fallback: close the unit unless the line ended with
            # an abbreviation-blocked period and the next line has content.
            tail = raw_text[last_non_ws]
            blocked = tail == "." and _is_abbreviation(raw_text, last_non_ws)
            if not blocked or _rest_of_line_blank(raw_text, i + 1):
                emit(last_non_ws + 1)

    if pending_start is not None:
        emit(last_non_ws + 1)

    return Document(raw_text=raw_text, sentences=tuple(sentences))
