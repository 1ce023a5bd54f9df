"""Persisted stroke database: build, load, and intensity matching.

A database holds per_quadrant strokes for each of the four emotion
quadrants, each rendered to an SVG asset and indexed with its contour
complexity.  Complexities are min-max normalized within each quadrant so
that emotion intensity (also on [0, 1]) can pick the nearest-complexity
stroke directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .emotion import Quadrant, STROKE_QUADRANTS
from .errors import EmptyQuadrantError, SchemaError
from .prng import splitmix64_at
from .stroke import ContourPolygon, StrokePath, polygon_complexity, ribbon_polygon, synthesize_stroke

INDEX_VERSION = 1
INDEX_FILENAME = "index.json"


def _round9(x: float) -> float:
    """Round to 9 significant digits (the on-disk float precision)."""
    return float(format(x, ".9g"))


@dataclass(frozen=True)
class StrokeRecord:
    id: int
    quadrant: Quadrant
    seed: int
    complexity: float
    normalized_complexity: float
    asset_path: str


@dataclass(frozen=True)
class StrokeIndex:
    records: tuple[StrokeRecord, ...]
    db_seed: int
    version: int = INDEX_VERSION

    def in_quadrant(self, quadrant: Quadrant) -> list[StrokeRecord]:
        return [r for r in self.records if r.quadrant == quadrant]


def polygon_to_path_data(poly: ContourPolygon) -> str:
    cmds = [f"M {poly.vertices[0][0]:.3f},{poly.vertices[0][1]:.3f}"]
    cmds += [f"L {x:.3f},{y:.3f}" for x, y in poly.vertices[1:]]
    cmds.append("Z")
    return " ".join(cmds)


def _stroke_asset_svg(poly: ContourPolygon) -> str:
    xs = [v[0] for v in poly.vertices]
    ys = [v[1] for v in poly.vertices]
    margin = 4.0
    x0, y0 = min(xs) - margin, min(ys) - margin
    w = max(xs) - min(xs) + 2 * margin
    h = max(ys) - min(ys) + 2 * margin
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0:.3f} {y0:.3f} {w:.3f} {h:.3f}">\n'
        f'  <path d="{polygon_to_path_data(poly)}" fill="black"/>\n'
        "</svg>\n"
    )


def _db_intensity(index_in_quadrant: int, per_quadrant: int) -> float:
    if per_quadrant == 1:
        return 0.5
    return index_in_quadrant / (per_quadrant - 1)


def build_database(per_quadrant: int, db_seed: int, out_dir: str | Path) -> StrokeIndex:
    """Synthesize and persist the stroke database.

    Stroke k of quadrant q (ordinal o) is seeded with output
    o*per_quadrant + k of the splitmix64 stream over db_seed, at intensity
    k/(per_quadrant-1).  The same db_seed therefore always reproduces the
    same assets and index bytes.
    """
    if per_quadrant < 1:
        raise ValueError("per_quadrant must be >= 1")
    out = Path(out_dir)
    (out / "strokes").mkdir(parents=True, exist_ok=True)

    records: list[StrokeRecord] = []
    polygons: list[ContourPolygon] = []
    for ordinal, quadrant in enumerate(STROKE_QUADRANTS):
        complexities: list[float] = []
        quadrant_records: list[tuple[int, int, ContourPolygon]] = []
        for k in range(per_quadrant):
            record_id = ordinal * per_quadrant + k
            seed = splitmix64_at(db_seed, record_id)
            path = synthesize_stroke(quadrant, _db_intensity(k, per_quadrant), seed)
            poly = ribbon_polygon(path)
            complexities.append(polygon_complexity(poly))
            quadrant_records.append((record_id, seed, poly))
        lo, hi = min(complexities), max(complexities)
        span = hi - lo
        for (record_id, seed, poly), comp in zip(quadrant_records, complexities):
            normalized = 0.5 if span < 1e-15 else (comp - lo) / span
            records.append(
                StrokeRecord(
                    id=record_id,
                    quadrant=quadrant,
                    seed=seed,
                    complexity=_round9(comp),
                    normalized_complexity=_round9(normalized),
                    asset_path=f"strokes/{record_id}.svg",
                )
            )
            polygons.append(poly)

    for record, poly in zip(records, polygons):
        (out / record.asset_path).write_text(_stroke_asset_svg(poly), encoding="utf-8")

    index = StrokeIndex(records=tuple(records), db_seed=db_seed)
    (out / INDEX_FILENAME).write_text(index_to_json(index), encoding="utf-8")
    return index


def index_to_json(index: StrokeIndex) -> str:
    payload = {
        "version": index.version,
        "db_seed": str(index.db_seed),
        "records": [
            {
                "id": r.id,
                "quadrant": r.quadrant.value,
                "seed": str(r.seed),
                "complexity": r.complexity,
                "normalized_complexity": r.normalized_complexity,
                "asset_path": r.asset_path,
            }
            for r in index.records
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def load_database(dir_path: str | Path) -> StrokeIndex:
    """Read and validate <dir>/index.json, checking version, dense ids,
    value ranges, and that every referenced asset file exists."""
    root = Path(dir_path)
    raw = (root / INDEX_FILENAME).read_text(encoding="utf-8")
    try:
        payload = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"index.json is not valid JSON: {exc}") from None

    version = payload.get("version")
    if version != INDEX_VERSION:
        raise SchemaError(f"unsupported index version {version!r}")
    try:
        db_seed = int(payload["db_seed"])
        raw_records = payload["records"]
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed index: {exc}") from None

    records: list[StrokeRecord] = []
    for entry in raw_records:
        try:
            record = StrokeRecord(
                id=int(entry["id"]),
                quadrant=Quadrant(entry["quadrant"]),
                seed=int(entry["seed"]),
                complexity=float(entry["complexity"]),
                normalized_complexity=float(entry["normalized_complexity"]),
                asset_path=str(entry["asset_path"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"malformed record {entry!r}: {exc}") from None
        if record.quadrant == Quadrant.NEUTRAL:
            raise SchemaError(f"record {record.id} stored under the neutral quadrant")
        if not 0.0 <= record.normalized_complexity <= 1.0:
            raise SchemaError(
                f"record {record.id} normalized_complexity outside [0, 1]"
            )
        records.append(record)

    ids = sorted(r.id for r in records)
    if ids != list(range(len(records))):
        raise SchemaError("record ids are not dense from 0")
    for record in records:
        if not (root / record.asset_path).is_file():
            raise SchemaError(f"missing stroke asset {record.asset_path}")

    return StrokeIndex(records=tuple(records), db_seed=db_seed, version=version)


def match_stroke(
    index: StrokeIndex, quadrant: Quadrant, normalized_intensity: float
) -> StrokeRecord:
    """Record whose normalized complexity is nearest the given intensity;
    exact distance ties go to the smaller id."""
    candidates = index.in_quadrant(quadrant)
    if not candidates:
        raise EmptyQuadrantError(f"no strokes stored for {quadrant.value}")
    return min(
        candidates,
        key=lambda r: (abs(r.normalized_complexity - normalized_intensity), r.id),
    )


def record_intensity(index: StrokeIndex, record: StrokeRecord) -> float:
    """Intensity the record was synthesized at, recovered from the build
    layout (ids are dense in quadrant-ordinal order)."""
    per = len(index.in_quadrant(record.quadrant))
    ordinal = STROKE_QUADRANTS.index(record.quadrant)
    k = record.id - ordinal * per
    if not 0 <= k < per:
        raise SchemaError(f"record {record.id} does not fit the build layout")
    return _db_intensity(k, per)


def stroke_path_for_record(index: StrokeIndex, record: StrokeRecord) -> StrokePath:
    """Re-synthesize the exact stroke the record was built from."""
    return synthesize_stroke(record.quadrant, record_intensity(index, record), record.seed)


def stroke_polygon_for_record(index: StrokeIndex, record: StrokeRecord) -> ContourPolygon:
    return ribbon_polygon(stroke_path_for_record(index, record))
