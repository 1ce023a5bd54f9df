"""Acceptance suite: one test per shipped guarantee.

Each test pins the tolerance it promises; a failure here means the package
no longer honors its contract, not that a unit regressed somewhere.
"""

import json
import math
import random
import shutil
import subprocess
from pathlib import Path

import numpy as np
import pytest

from poemotion import cli
from poemotion.conllu import parse_conllu, whole_sentence_segment
from poemotion.emotion import Quadrant, classify_quadrant, intensity
from poemotion.errors import FormatError, ProtocolError
from poemotion.rank import RankedPool, SegmentGraph, select_top, textrank_scores
from poemotion.scorer_client import score_segments_external
from poemotion.stroke import (
    gan_objective,
    polygon_complexity,
    ribbon_polygon,
    stroke_params,
    synthesize_stroke,
)
from poemotion.strokedb import StrokeIndex, StrokeRecord, build_database, match_stroke

from conftest import ECHO_ADAPTER, OUT_OF_RANGE_ADAPTER, make_adapter

DRAWN = (Quadrant.EXCITEMENT, Quadrant.ANGER, Quadrant.SADNESS, Quadrant.RELAXATION)


def test_intensity_matches_euclidean_norm():
    rng = random.Random(11)
    for _ in range(1000):
        v = rng.uniform(-1.0, 1.0)
        a = rng.uniform(-1.0, 1.0)
        assert abs(intensity(v, a) - math.sqrt(v * v + a * a)) <= 1e-12
    assert abs(intensity(0.6, 0.8) - 1.0) <= 1e-12


def test_quadrant_labels_and_scale_invariance():
    assert classify_quadrant(0.5, 0.5) is Quadrant.EXCITEMENT
    assert classify_quadrant(-0.5, 0.5) is Quadrant.ANGER
    assert classify_quadrant(-0.5, -0.5) is Quadrant.SADNESS
    assert classify_quadrant(0.5, -0.5) is Quadrant.RELAXATION
    assert classify_quadrant(0.0, 0.0) is Quadrant.NEUTRAL
    rng = random.Random(12)
    for _ in range(1000):
        v = rng.uniform(-1.0, 1.0)
        a = rng.uniform(-1.0, 1.0)
        s = rng.uniform(1e-6, 1.0)  # keep scaled points inside the domain
        assert classify_quadrant(v, a) is classify_quadrant(s * v, s * a)


def _random_graph(rng, n):
    weights = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            w = rng.uniform(0.0, 1.0) if rng.random() < 0.7 else 0.0
            weights[i][j] = weights[j][i] = w
    return SegmentGraph(n=n, weights=np.array(weights), node_ids=tuple(range(n)))


def _power_iteration_oracle(weights, damping=0.85, sweeps=500):
    n = len(weights)
    scores = [1.0 / n] * n
    for _ in range(sweeps):
        updated = []
        for i in range(n):
            acc = 0.0
            for j in range(n):
                out = sum(weights[j])
                share = (1.0 / n) if out == 0.0 else weights[j][i] / out
                acc += share * scores[j]
            updated.append((1.0 - damping) / n + damping * acc)
        scores = updated
    return scores


def test_textrank_sums_symmetry_and_oracle_agreement():
    rng = random.Random(13)
    for _ in range(100):
        graph = _random_graph(rng, rng.randint(2, 12))
        assert abs(float(textrank_scores(graph).sum()) - 1.0) <= 1e-6

    two = SegmentGraph(
        n=2, weights=np.array([[0.0, 0.8], [0.8, 0.0]]), node_ids=(0, 1)
    )
    scores = textrank_scores(two)
    assert abs(scores[0] - 0.5) <= 1e-9 and abs(scores[1] - 0.5) <= 1e-9

    for trial in range(60):
        n = 1 + trial % 6
        graph = _random_graph(rng, n)
        expected = _power_iteration_oracle([list(row) for row in graph.weights])
        got = textrank_scores(graph)
        assert max(abs(g - e) for g, e in zip(got, expected)) <= 1e-6


def test_selection_keeps_top_half():
    rng = random.Random(14)
    for n in range(1, 21):
        segments = [whole_sentence_segment(f"line {i} text", i) for i in range(n)]
        scores = [rng.random() for _ in range(n)]
        pool = RankedPool(segments=tuple(zip(segments, scores)))
        assert len(select_top(pool, 0.5)) == max(1, math.ceil(0.5 * n))


def _regular_ngon(n, radius=1.0):
    from poemotion.stroke import ContourPolygon

    return ContourPolygon(
        vertices=tuple(
            (radius * math.cos(2 * math.pi * k / n), radius * math.sin(2 * math.pi * k / n))
            for k in range(n)
        )
    )


def test_contour_complexity_analytic_values():
    from poemotion.stroke import ContourPolygon

    previous = None
    for n in range(3, 129):
        got = polygon_complexity(_regular_ngon(n))
        expected = 4.0 * n * math.tan(math.pi / n)
        assert abs(got - expected) <= 1e-9
        assert got > 4.0 * math.pi
        if previous is not None:
            assert got < previous
        previous = got

    square = ContourPolygon(vertices=((0, 0), (1, 0), (1, 1), (0, 1)))
    assert abs(polygon_complexity(square) - 16.0) <= 1e-12

    base = _regular_ngon(7, radius=2.5)
    scaled = _regular_ngon(7, radius=2.5 * 137.0)
    assert abs(polygon_complexity(base) - polygon_complexity(scaled)) <= 1e-9


def test_adversarial_objective_value_and_monotonicity():
    n = 16
    uniform = gan_objective([0.5] * n, [0.5] * n)
    assert abs(uniform - (-2.0 * math.log(2.0))) <= 1e-9

    rng = random.Random(15)
    for _ in range(100):
        d_real = [rng.uniform(0.05, 0.95) for _ in range(8)]
        d_fake = [rng.uniform(0.05, 0.95) for _ in range(8)]
        base = gan_objective(d_real, d_fake)
        i = rng.randrange(8)
        better_real = list(d_real)
        better_real[i] = min(0.999, d_real[i] + 0.03)
        assert gan_objective(better_real, d_fake) > base
        better_fake = list(d_fake)
        better_fake[i] = max(0.001, d_fake[i] - 0.03)
        assert gan_objective(d_real, better_fake) > base


def test_stroke_determinism_and_feature_orderings(tmp_path):
    for quadrant in DRAWN:
        a = synthesize_stroke(quadrant, 0.5, 777)
        b = synthesize_stroke(quadrant, 0.5, 777)
        assert a.points == b.points

    first = tmp_path / "db1"
    second = tmp_path / "db2"
    build_database(per_quadrant=4, db_seed=9, out_dir=first)
    build_database(per_quadrant=4, db_seed=9, out_dir=second)
    assert (first / "index.json").read_bytes() == (second / "index.json").read_bytes()
    for asset in sorted((first / "strokes").glob("*.svg")):
        assert asset.read_bytes() == (second / "strokes" / asset.name).read_bytes()

    for seed in range(50):
        for ni in (0.0, 0.5, 1.0):
            anger = synthesize_stroke(Quadrant.ANGER, ni, seed)
            excite = synthesize_stroke(Quadrant.EXCITEMENT, ni, seed)
            sadness = synthesize_stroke(Quadrant.SADNESS, ni, seed)
            assert anger.mean_width() > excite.mean_width()
            assert (
                stroke_params(Quadrant.SADNESS, ni).tremor_amp
                > stroke_params(Quadrant.RELAXATION, ni).tremor_amp
            )
            assert excite.mean_step() > sadness.mean_step()


def test_matching_agrees_with_exhaustive_scan(small_db):
    _, index = small_db
    assert len(index.records) <= 64
    for quadrant in DRAWN:
        previous = None
        for step in range(41):
            ni = step / 40.0
            got = match_stroke(index, quadrant, ni)
            best = min(
                index.in_quadrant(quadrant),
                key=lambda r: (abs(r.normalized_complexity - ni), r.id),
            )
            assert got == best
            if previous is not None:
                assert got.normalized_complexity >= previous - 1e-12
            previous = got.normalized_complexity

    tied = StrokeIndex(
        records=(
            StrokeRecord(0, Quadrant.ANGER, 1, 30.0, 0.4, "strokes/0.svg"),
            StrokeRecord(1, Quadrant.ANGER, 2, 31.0, 0.6, "strokes/1.svg"),
        ),
        db_seed=0,
    )
    assert match_stroke(tied, Quadrant.ANGER, 0.5).id == 0


def test_end_to_end_path_count_and_reproducibility(fixtures_dir, small_db, tmp_path):
    db_dir, _ = small_db
    outputs = []
    for name in ("run1", "run2"):
        out = tmp_path / f"{name}.svg"
        code = cli.main(
            [
                "analyze",
                "--input", str(fixtures_dir / "poem.txt"),
                "--conllu", str(fixtures_dir / "poem.conllu"),
                "--lexicon", str(fixtures_dir / "vad_lexicon.tsv"),
                "--db", str(db_dir),
                "--out", str(out),
                "--seed", "42",
            ]
        )
        assert code == 0
        outputs.append((out.read_bytes(), (tmp_path / f"{name}.json").read_bytes()))

    svg = outputs[0][0].decode("utf-8")
    report = json.loads(outputs[0][1])
    non_neutral = sum(1 for row in report["segments"] if row["quadrant"] != "Neutral")
    assert report["counts"]["non_neutral"] == non_neutral
    assert svg.count("<path") == non_neutral
    assert outputs[0] == outputs[1]


def test_conllu_fixture_parses_losslessly(fixtures_dir):
    raw = (fixtures_dir / "poem.conllu").read_text(encoding="utf-8")
    sentences = parse_conllu(raw.splitlines())
    assert len(sentences) == 10

    blocks, current = [], []
    for line in raw.splitlines():
        if not line.strip():
            if current:
                blocks.append(current)
                current = []
        elif not line.startswith("#"):
            current.append(line.split("\t"))
    if current:
        blocks.append(current)

    for sent, rows in zip(sentences, blocks):
        assert len(sent.tokens) == len(rows)
        for token, cols in zip(sent.tokens, rows):
            assert (
                token.id, token.form, token.lemma,
                token.upos, token.head, token.deprel,
            ) == (int(cols[0]), cols[1], cols[2], cols[3], int(cols[6]), cols[7])

    bad = ["1\tonly\tonly\tADV\t_\t_\t0\troot\t_\t_", "2\tnine\tcolumns"]
    with pytest.raises(FormatError, match="line 2"):
        parse_conllu(bad)


def test_scorer_protocol_round_trip(tmp_path):
    cmd = make_adapter(tmp_path, ECHO_ADAPTER, "echo.py")
    proc = subprocess.Popen(
        cmd.split(),
        stdin=subprocess.PIPE,
        stdout=subprocess.PIPE,
        text=True,
    )
    try:
        handshake = json.loads(proc.stdout.readline())
        assert handshake == {"protocol": "poemotion-scorer", "version": 1}
        for i in range(100):
            proc.stdin.write(json.dumps({"id": i, "text": f"line {i}"}) + "\n")
            proc.stdin.flush()
            response = json.loads(proc.stdout.readline())
            assert response["id"] == i
            assert -1.0 <= response["valence"] <= 1.0
            assert -1.0 <= response["arousal"] <= 1.0
        proc.stdin.close()
        assert proc.wait(timeout=10) == 0
    finally:
        if proc.poll() is None:
            proc.kill()

    segments = [whole_sentence_segment("a stormy night", 0)]
    faulty = make_adapter(tmp_path, OUT_OF_RANGE_ADAPTER, "faulty.py")
    with pytest.raises(ProtocolError):
        score_segments_external(segments, faulty, timeout_s=10.0)


def test_reference_adapter_round_trip_when_built():
    """Same round trip against the shipped reference adapter, if compiled."""
    built = Path(__file__).parent.parent / "scorer-adapter" / "dist" / "main.js"
    node = shutil.which("node")
    if node is None or not built.exists():
        pytest.skip("reference scorer adapter not built (scorer-adapter/dist)")
    segments = [whole_sentence_segment(f"line {i} of the poem", i) for i in range(100)]
    pairs = score_segments_external(
        segments, f"{node} {built} --mode echo", timeout_s=30.0
    )
    assert pairs == [(0.0, 0.0)] * 100
