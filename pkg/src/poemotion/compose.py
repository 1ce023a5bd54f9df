"""Assemble scored segments and matched strokes into one SVG sheet.

The sheet is a fixed 1600-unit-wide column: a header band naming the poem
and its unit count, then one 240-unit row per annotation in document
order.  Segment text sits on the left; the matched stroke is scaled
uniformly into a 220x220 box on the right, black on white, with opacity
0.35 + 0.65 * normalized_intensity.  Neutral segments render as text-only
rows.  Output bytes depend only on the inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence
from xml.sax.saxutils import escape

from .conllu import SemanticSegment
from .emotion import EmotionScore, Quadrant
from .errors import DomainError
from .stroke import ContourPolygon
from .strokedb import StrokeRecord, polygon_to_path_data
from .textseg import Document

CANVAS_WIDTH = 1600
HEADER_HEIGHT = 80
ROW_HEIGHT = 240
STROKE_BOX = 220
MARGIN = 40


@dataclass(frozen=True)
class Annotation:
    """One selected segment, its emotion score, and its matched stroke.

    `stroke` (and the `outline` geometry re-synthesized from it) is present
    exactly when the segment is not Neutral.
    """

    segment: SemanticSegment
    score: EmotionScore
    stroke: StrokeRecord | None
    outline: ContourPolygon | None = None

    def __post_init__(self):
        neutral = self.score.quadrant is Quadrant.NEUTRAL
        if neutral != (self.stroke is None):
            raise DomainError(
                "stroke must be present exactly when the quadrant is not Neutral"
            )
        if self.outline is not None and self.stroke is None:
            raise DomainError("outline geometry requires a matched stroke")


@dataclass(frozen=True)
class Composition:
    poem: Document
    annotations: tuple[Annotation, ...]
    canvas: tuple[int, int]

    def __post_init__(self):
        n = len(self.poem.sentences)
        for ann in self.annotations:
            if not 0 <= ann.segment.sentence_id < n:
                raise DomainError(
                    f"annotation references sentence {ann.segment.sentence_id} "
                    f"outside the poem's {n} units"
                )

    @classmethod
    def assemble(cls, poem: Document, annotations: Sequence[Annotation]) -> "Composition":
        height = HEADER_HEIGHT + ROW_HEIGHT * len(annotations)
        return cls(poem=poem, annotations=tuple(annotations), canvas=(CANVAS_WIDTH, height))


def stroke_opacity(normalized_intensity: float) -> float:
    return 0.35 + 0.65 * normalized_intensity


def _default_title(poem: Document) -> str:
    if not poem.sentences:
        return "(empty poem)"
    first = poem.sentences[0].text
    return first if len(first) <= 48 else first[:47] + "…"


def _fit_polygon(poly: ContourPolygon, box_x: float, box_y: float, box: float) -> str:
    xs = [v[0] for v in poly.vertices]
    ys = [v[1] for v in poly.vertices]
    w = max(xs) - min(xs)
    h = max(ys) - min(ys)
    scale = box / max(w, h, 1e-9)
    ox = box_x + (box - w * scale) / 2.0 - min(xs) * scale
    oy = box_y + (box - h * scale) / 2.0 - min(ys) * scale
    moved = ContourPolygon(
        vertices=tuple((ox + x * scale, oy + y * scale) for x, y in poly.vertices)
    )
    return polygon_to_path_data(moved)


def compose_svg(composition: Composition, title: str | None = None) -> str:
    """Render the composition sheet; identical input gives identical bytes."""
    width, height = composition.canvas
    units = len(composition.poem.sentences)
    heading = f"{title if title is not None else _default_title(composition.poem)}"
    heading += f" · {units} unit{'' if units == 1 else 's'}"
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'  <rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'  <text x="{MARGIN}" y="52" font-family="serif" font-size="30" '
        f'fill="black">{escape(heading)}</text>',
        f'  <line x1="0" y1="{HEADER_HEIGHT}" x2="{width}" '
        f'y2="{HEADER_HEIGHT}" stroke="black" stroke-width="1"/>',
    ]
    for i, ann in enumerate(composition.annotations):
        top = HEADER_HEIGHT + ROW_HEIGHT * i
        score = ann.score
        label = (
            f"{score.quadrant.value}  V={score.valence:+.3f}  A={score.arousal:+.3f}  "
            f"intensity={score.normalized_intensity:.3f}"
        )
        lines.append(f'  <g id="row-{ann.segment.id}">')
        lines.append(
            f'    <text x="{MARGIN}" y="{top + 118}" font-family="serif" '
            f'font-size="24" fill="black">{escape(ann.segment.text)}</text>'
        )
        lines.append(
            f'    <text x="{MARGIN}" y="{top + 152}" font-family="serif" '
            f'font-size="14" fill="black">{escape(label)}</text>'
        )
        if ann.outline is not None:
            box_x = width - MARGIN - STROKE_BOX
            box_y = top + (ROW_HEIGHT - STROKE_BOX) / 2.0
            d = _fit_polygon(ann.outline, box_x, box_y, STROKE_BOX)
            opacity = stroke_opacity(score.normalized_intensity)
            lines.append(
                f'    <path d="{d}" fill="black" fill-opacity="{opacity:.3f}"/>'
            )
        lines.append("  </g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
