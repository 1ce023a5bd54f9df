"""poemotion: turn poems into emotion-annotated calligraphic SVG compositions.

The pipeline segments a poem into sentence units, extracts noun/verb
phrases from dependency parses, ranks them on a similarity graph, scores
the survivors' valence and arousal, classifies each into a Russell-quadrant
emotion with an intensity, matches a synthesized calligraphic stroke of
corresponding complexity, and renders everything as one SVG sheet.
"""

from . import errors
from .compose import Annotation, Composition, compose_svg
from .conllu import (
    DepSentence,
    DepToken,
    SegmentKind,
    SemanticSegment,
    extract_segments,
    parse_conllu,
    whole_sentence_segment,
)
from .emotion import (
    EmotionScore,
    Quadrant,
    VadLexicon,
    classify_quadrant,
    intensity,
    load_lexicon,
    score_segment_lexicon,
)
from .pipeline import PipelineConfig, PipelineResult, run_pipeline
from .rank import (
    RankedPool,
    SegmentGraph,
    build_graph,
    embed_segment,
    rank_pool,
    select_top,
    textrank_scores,
)
from .scorer_client import score_segments_external
from .stroke import (
    ContourPolygon,
    StrokeParams,
    StrokePath,
    gan_objective,
    polygon_complexity,
    ribbon_polygon,
    stroke_params,
    synthesize_stroke,
)
from .strokedb import (
    StrokeIndex,
    StrokeRecord,
    build_database,
    load_database,
    match_stroke,
)
from .textseg import Document, Sentence, segment_sentences

__version__ = "0.1.0"

__all__ = [
    "Annotation",
    "Composition",
    "ContourPolygon",
    "DepSentence",
    "DepToken",
    "Document",
    "EmotionScore",
    "PipelineConfig",
    "PipelineResult",
    "Quadrant",
    "RankedPool",
    "SegmentGraph",
    "SegmentKind",
    "SemanticSegment",
    "Sentence",
    "StrokeIndex",
    "StrokeParams",
    "StrokePath",
    "StrokeRecord",
    "VadLexicon",
    "build_database",
    "build_graph",
    "classify_quadrant",
    "compose_svg",
    "embed_segment",
    "errors",
    "extract_segments",
    "gan_objective",
    "intensity",
    "load_database",
    "load_lexicon",
    "match_stroke",
    "parse_conllu",
    "polygon_complexity",
    "rank_pool",
    "ribbon_polygon",
    "run_pipeline",
    "score_segment_lexicon",
    "score_segments_external",
    "segment_sentences",
    "select_top",
    "stroke_params",
    "synthesize_stroke",
    "textrank_scores",
    "whole_sentence_segment",
]
