"""End-to-end analysis: poem text in, SVG composition and JSON report out.

The stage chain is: sentence segmentation -> semantic-segment extraction
(dependency parses when provided, whole-sentence fallback otherwise) ->
similarity graph + importance ranking -> top-fraction selection ->
valence/arousal scoring -> quadrant + intensity -> stroke matching ->
SVG composition.  All outputs are written only after every stage has
succeeded, so a failing run leaves no partial files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .compose import Annotation, Composition, compose_svg
from .conllu import extract_segments, parse_conllu, renumber, whole_sentence_segment
from .emotion import EmotionScore, Quadrant, VadLexicon, load_lexicon, score_segment_lexicon
from .errors import EmptyPoolError, PipelineError
from .figures import write_table, write_va_figure
from .rank import TextRankResult, rank_pool, select_top
from .scorer_client import score_segments_external
from .strokedb import StrokeIndex, load_database, match_stroke, stroke_polygon_for_record
from .textseg import segment_sentences

REPORT_VERSION = 1


def _round9(x: float) -> float:
    return float(format(x, ".9g"))


@dataclass(frozen=True)
class PipelineConfig:
    """One analysis run.  `scorer` is "lexicon" or "external"; the lexicon
    scorer needs `lexicon_path`, the external one needs `scorer_cmd`."""

    input_path: str | Path
    db_dir: str | Path
    out_path: str | Path
    conllu_path: str | Path | None = None
    lexicon_path: str | Path | None = None
    scorer: str = "lexicon"
    scorer_cmd: str | None = None
    scorer_timeout: float = 30.0
    keep_ratio: float = 0.5
    damping: float = 0.85
    report_path: str | Path | None = None
    figure_path: str | Path | None = None
    table_path: str | Path | None = None
    seed: int = 42
    title: str | None = None

    def __post_init__(self):
        if self.scorer not in ("lexicon", "external"):
            raise PipelineError(f"unknown scorer {self.scorer!r}")
        if self.scorer == "lexicon" and self.lexicon_path is None:
            raise PipelineError("the lexicon scorer requires a lexicon path")
        if self.scorer == "external" and not self.scorer_cmd:
            raise PipelineError("the external scorer requires a scorer command")


@dataclass(frozen=True)
class PipelineResult:
    composition: Composition
    svg: str
    report: dict
    out_path: Path
    report_path: Path
    convergence: TextRankResult


def _read_text(path: str | Path, what: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise PipelineError(f"cannot read {what} {path}: {exc}") from None


def _load_lexicon_file(path: str | Path) -> VadLexicon:
    return load_lexicon(_read_text(path, "lexicon").splitlines())


def _pool_segments(poem, conllu_path):
    if conllu_path is None:
        return [whole_sentence_segment(s.text, s.id) for s in poem.sentences]
    blocks = parse_conllu(_read_text(conllu_path, "CoNLL-U file").splitlines())
    if len(blocks) != len(poem.sentences):
        raise PipelineError(
            f"CoNLL-U file has {len(blocks)} sentences but the poem "
            f"segments into {len(poem.sentences)} units"
        )
    return [
        segment
        for i, block in enumerate(blocks)
        for segment in extract_segments(block, i)
    ]


def _annotate(selected, pairs, index: StrokeIndex) -> list[Annotation]:
    annotations = []
    for segment, (valence, arousal) in zip(selected, pairs):
        score = EmotionScore.from_va(valence, arousal)
        if score.quadrant is Quadrant.NEUTRAL:
            annotations.append(Annotation(segment, score, None, None))
        else:
            record = match_stroke(index, score.quadrant, score.normalized_intensity)
            outline = stroke_polygon_for_record(index, record)
            annotations.append(Annotation(segment, score, record, outline))
    return annotations


def _report_rows(annotations, rank_by_id) -> list[dict]:
    rows = []
    for ann in annotations:
        seg, score = ann.segment, ann.score
        rows.append(
            {
                "segment_id": seg.id,
                "sentence_id": seg.sentence_id,
                "kind": seg.kind.value,
                "text": seg.text,
                "rank_score": _round9(rank_by_id[seg.id]),
                "valence": _round9(score.valence),
                "arousal": _round9(score.arousal),
                "intensity": _round9(score.intensity),
                "normalized_intensity": _round9(score.normalized_intensity),
                "quadrant": score.quadrant.value,
                "stroke_id": None if ann.stroke is None else ann.stroke.id,
                "stroke_asset": None if ann.stroke is None else ann.stroke.asset_path,
            }
        )
    return rows


def _write_text_file(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def run_pipeline(config: PipelineConfig) -> PipelineResult:
    """Run the full chain and write the SVG + report (and, when asked,
    the valence-arousal figure and TSV table)."""
    index = load_database(config.db_dir)
    lexicon = (
        _load_lexicon_file(config.lexicon_path) if config.scorer == "lexicon" else None
    )
    raw_text = _read_text(config.input_path, "input poem")

    poem = segment_sentences(raw_text)
    pool = renumber(_pool_segments(poem, config.conllu_path))
    if not pool:
        raise EmptyPoolError("no semantic segments pooled from the input")

    ranked, convergence = rank_pool(pool, damping=config.damping)
    selected = select_top(ranked, config.keep_ratio)

    if config.scorer == "external":
        pairs = score_segments_external(
            selected, config.scorer_cmd, config.scorer_timeout
        )
    else:
        pairs = [score_segment_lexicon(segment, lexicon) for segment in selected]

    annotations = _annotate(selected, pairs, index)
    composition = Composition.assemble(poem, annotations)
    svg = compose_svg(composition, title=config.title)

    rank_by_id = {segment.id: score for segment, score in ranked.segments}
    rows = _report_rows(annotations, rank_by_id)
    report = {
        "version": REPORT_VERSION,
        "input": str(config.input_path),
        "params": {
            "seed": config.seed,
            "keep_ratio": config.keep_ratio,
            "damping": config.damping,
            "scorer": config.scorer,
            "db_seed": str(index.db_seed),
        },
        "counts": {
            "sentences": len(poem.sentences),
            "pool": len(pool),
            "selected": len(selected),
            "non_neutral": sum(1 for a in annotations if a.stroke is not None),
        },
        "textrank": {
            "iterations": convergence.iterations,
            "converged": convergence.converged,
        },
        "segments": rows,
    }

    out_path = Path(config.out_path)
    report_path = (
        Path(config.report_path)
        if config.report_path is not None
        else out_path.with_suffix(".json")
    )
    _write_text_file(out_path, svg)
    _write_text_file(report_path, json.dumps(report, indent=2, ensure_ascii=False) + "\n")
    if config.figure_path is not None:
        Path(config.figure_path).parent.mkdir(parents=True, exist_ok=True)
        write_va_figure(rows, config.figure_path)
    if config.table_path is not None:
        Path(config.table_path).parent.mkdir(parents=True, exist_ok=True)
        write_table(rows, config.table_path)

    return PipelineResult(
        composition=composition,
        svg=svg,
        report=report,
        out_path=out_path,
        report_path=report_path,
        convergence=convergence,
    )
