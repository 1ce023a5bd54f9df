"""Command-line front end: `poemotion build-db` and `poemotion analyze`.

Exit codes for analyze: 0 success, 2 missing/invalid files or bad
arguments, 3 scorer protocol failure, 4 empty segment pool.
"""

from __future__ import annotations

import argparse
import sys

from .errors import (
    EmptyPoolError,
    LaunchError,
    PoemotionError,
    ProtocolError,
    ScorerTimeoutError,
)
from .pipeline import PipelineConfig, run_pipeline
from .strokedb import build_database


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poemotion",
        description="Turn a poem into an emotion-annotated calligraphic SVG.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    db = sub.add_parser("build-db", help="synthesize and persist the stroke database")
    db.add_argument("--out", required=True, help="output directory")
    db.add_argument(
        "--per-quadrant", type=int, default=64, help="strokes per emotion quadrant"
    )
    db.add_argument("--seed", type=_u64, default=42, help="database seed")

    an = sub.add_parser(
        "analyze", help="analyze a poem into an SVG composition and a JSON report"
    )
    an.add_argument("--input", required=True, help="poem text file (UTF-8)")
    an.add_argument("--conllu", help="dependency parses; omit for whole-line segments")
    an.add_argument("--lexicon", help="valence/arousal TSV for the lexicon scorer")
    an.add_argument("--scorer", choices=("lexicon", "external"), default="lexicon")
    an.add_argument("--scorer-cmd", help="external scorer command line")
    an.add_argument("--scorer-timeout", type=float, default=30.0, metavar="SECONDS")
    an.add_argument("--keep-ratio", type=float, default=0.5)
    an.add_argument("--damping", type=float, default=0.85)
    an.add_argument("--db", required=True, help="stroke database directory")
    an.add_argument("--out", required=True, help="SVG output path")
    an.add_argument("--report", help="JSON report path (default: <out>.json)")
    an.add_argument("--figure", help="also save a valence-arousal scatter (PNG)")
    an.add_argument("--table", help="also save the segment table (TSV)")
    an.add_argument("--title", help="composition title (default: first unit)")
    an.add_argument("--seed", type=_u64, default=42, help="recorded in the report")
    return parser


def _cmd_build_db(args: argparse.Namespace) -> int:
    try:
        index = build_database(args.per_quadrant, args.seed, args.out)
    except (OSError, ValueError) as exc:
        print(f"poemotion: {exc}", file=sys.stderr)
        return 2
    print(f"built {len(index.records)} strokes in {args.out}")
    return 0


def _cmd_analyze(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.scorer == "lexicon" and not args.lexicon:
        parser.error("--scorer lexicon requires --lexicon")
    if args.scorer == "external" and not args.scorer_cmd:
        parser.error("--scorer external requires --scorer-cmd")
    if not 0.0 < args.keep_ratio <= 1.0:
        parser.error("--keep-ratio must be in (0, 1]")
    if not 0.0 < args.damping < 1.0:
        parser.error("--damping must be in (0, 1)")

    config = PipelineConfig(
        input_path=args.input,
        db_dir=args.db,
        out_path=args.out,
        conllu_path=args.conllu,
        lexicon_path=args.lexicon,
        scorer=args.scorer,
        scorer_cmd=args.scorer_cmd,
        scorer_timeout=args.scorer_timeout,
        keep_ratio=args.keep_ratio,
        damping=args.damping,
        report_path=args.report,
        figure_path=args.figure,
        table_path=args.table,
        seed=args.seed,
        title=args.title,
    )
    try:
        result = run_pipeline(config)
    except (ProtocolError, ScorerTimeoutError, LaunchError) as exc:
        print(f"poemotion: scorer failure: {exc}", file=sys.stderr)
        return 3
    except EmptyPoolError as exc:
        print(f"poemotion: {exc}", file=sys.stderr)
        return 4
    except (PoemotionError, OSError) as exc:
        print(f"poemotion: {exc}", file=sys.stderr)
        return 2

    counts = result.report["counts"]
    print(
        f"wrote {result.out_path} and {result.report_path} "
        f"({counts['selected']} segments, {counts['non_neutral']} strokes)"
    )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "build-db":
        return _cmd_build_db(args)
    return _cmd_analyze(args, parser)


if __name__ == "__main__":
    sys.exit(main())
