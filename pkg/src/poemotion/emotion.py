"""Valence/arousal scoring, intensity, and quadrant classification.

Quadrants follow the circumplex plane: pleasant/high-energy is excitement,
unpleasant/high-energy anger, unpleasant/low-energy sadness, and
pleasant/low-energy relaxation.  Zero axes fall on the non-negative side,
and the exact origin is carved out as Neutral so every (V, A) pair has one
deterministic label.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, TextIO

from .conllu import SemanticSegment
from .errors import DomainError, FormatError, RangeError

SQRT2 = math.sqrt(2.0)

_WORD_RE = re.compile(r"[^\W\d_]+", re.UNICODE)


class Quadrant(Enum):
    EXCITEMENT = "Excitement"
    ANGER = "Anger"
    SADNESS = "Sadness"
    RELAXATION = "Relaxation"
    NEUTRAL = "Neutral"


# Fixed ordinal used wherever strokes are grouped or seeded per quadrant.
STROKE_QUADRANTS = (
    Quadrant.EXCITEMENT,
    Quadrant.ANGER,
    Quadrant.SADNESS,
    Quadrant.RELAXATION,
)


def _check_domain(valence: float, arousal: float) -> None:
    if not (-1.0 <= valence <= 1.0) or not (-1.0 <= arousal <= 1.0):
        raise DomainError(f"(valence, arousal)=({valence}, {arousal}) outside [-1, 1]^2")


def intensity(valence: float, arousal: float) -> float:
    """Euclidean norm of the (valence, arousal) point."""
    _check_domain(valence, arousal)
    return math.sqrt(valence * valence + arousal * arousal)


def classify_quadrant(valence: float, arousal: float) -> Quadrant:
    _check_domain(valence, arousal)
    if valence == 0.0 and arousal == 0.0:
        return Quadrant.NEUTRAL
    if valence >= 0.0:
        return Quadrant.EXCITEMENT if arousal >= 0.0 else Quadrant.RELAXATION
    return Quadrant.ANGER if arousal >= 0.0 else Quadrant.SADNESS


@dataclass(frozen=True)
class EmotionScore:
    valence: float
    arousal: float
    intensity: float
    normalized_intensity: float
    quadrant: Quadrant

    @classmethod
    def from_va(cls, valence: float, arousal: float) -> "EmotionScore":
        mag = intensity(valence, arousal)
        return cls(
            valence=valence,
            arousal=arousal,
            intensity=mag,
            normalized_intensity=mag / SQRT2,
            quadrant=classify_quadrant(valence, arousal),
        )


@dataclass(frozen=True)
class VadLexicon:
    """word -> (valence, arousal), all values in [-1, 1], keys lowercase."""

    entries: dict[str, tuple[float, float]]

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def __len__(self) -> int:
        return len(self.entries)


def load_lexicon(stream: TextIO | Iterable[str]) -> VadLexicon:
    """Parse a TSV lexicon (word, valence, arousal per line).

    '#' lines are comments, blank lines are skipped, and a word appearing
    twice keeps its last entry.  Errors carry the offending line number.
    """
    entries: dict[str, tuple[float, float]] = {}
    for line_no, raw in enumerate(stream, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 3:
            raise FormatError(f"expected 3 columns, got {len(cols)}", line_no)
        word = cols[0].strip().lower()
        try:
            valence = float(cols[1])
            arousal = float(cols[2])
        except ValueError:
            raise FormatError(f"non-numeric score in {line.rstrip()!r}", line_no) from None
        if not (-1.0 <= valence <= 1.0) or not (-1.0 <= arousal <= 1.0):
            raise RangeError(f"({valence}, {arousal}) outside [-1, 1]", line_no)
        entries[word] = (valence, arousal)
    return VadLexicon(entries=entries)


def score_segment_lexicon(
    segment: SemanticSegment, lexicon: VadLexicon
) -> tuple[float, float]:
    """Mean lexicon valence/arousal over the segment's alphabetic tokens;
    (0, 0) when nothing matches."""
    hits = [
        lexicon.entries[word]
        for word in (m.group(0).lower() for m in _WORD_RE.finditer(segment.text))
        if word in lexicon.entries
    ]
    if not hits:
        return (0.0, 0.0)
    v = sum(h[0] for h in hits) / len(hits)
    a = sum(h[1] for h in hits) / len(hits)
    return (v, a)
