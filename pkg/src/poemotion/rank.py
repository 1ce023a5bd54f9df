"""Segment pooling, similarity graph and TextRank selection.

The default embedding is a hashed character-trigram vector rather than a
learned one: it is deterministic across runs and platforms, and the
provider is swappable (any ``text -> vector`` callable of fixed dimension)
for callers who want model-backed similarity instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .conllu import SemanticSegment
from .errors import EmptyPoolError, RatioOutOfRangeError

EMBED_DIM = 256

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1


def _fnv1a_64(data: bytes) -> int:
    h = _FNV_OFFSET
    for byte in data:
        h ^= byte
        h = (h * _FNV_PRIME) & _MASK64
    return h


def embed_segment(segment_text: str) -> np.ndarray:
    """Hashed-trigram embedding: 256 FNV-1a buckets over the character
    trigrams of the normalized text, L2-normalized.  Texts shorter than one
    trigram map to the zero vector."""
    normalized = " ".join(segment_text.lower().split())
    vec = np.zeros(EMBED_DIM)
    if len(normalized) < 3:
        return vec
    for i in range(len(normalized) - 2):
        trigram = normalized[i : i + 3]
        vec[_fnv1a_64(trigram.encode("utf-8")) % EMBED_DIM] += 1.0
    norm = math.sqrt(float(np.dot(vec, vec)))
    if norm > 0.0:
        vec /= norm
    return vec


@dataclass(frozen=True)
class SegmentGraph:
    """Complete similarity graph over the pool: symmetric weights in [0, 1]
    with a zero diagonal."""

    n: int
    weights: np.ndarray
    node_ids: tuple[int, ...]


@dataclass(frozen=True)
class TextRankResult:
    scores: np.ndarray
    iterations: int
    converged: bool


def build_graph(
    pool: Sequence[SemanticSegment],
    embed: Callable[[str], np.ndarray] = embed_segment,
) -> SegmentGraph:
    """Pairwise clipped-cosine graph over the pooled segments."""
    if not pool:
        raise EmptyPoolError("cannot build a graph over an empty pool")
    vectors = [embed(seg.text) for seg in pool]
    n = len(pool)
    weights = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            w = max(0.0, float(np.dot(vectors[i], vectors[j])))
            weights[i, j] = w
            weights[j, i] = w
    return SegmentGraph(n=n, weights=weights, node_ids=tuple(seg.id for seg in pool))


def textrank(
    graph: SegmentGraph,
    damping: float = 0.85,
    tol: float = 1e-8,
    max_iter: int = 200,
) -> TextRankResult:
    """Weighted PageRank over the segment graph.

    s_i <- (1-d)/N + d * sum_j (w_ji / sum_k w_jk) * s_j, with rows of zero
    out-weight distributing uniformly.  Starts uniform and stops when the L1
    change drops below ``tol``; a non-converged run still returns the last
    iterate, flagged on the result.
    """
    if not 0.0 < damping < 1.0:
        raise ValueError("damping must lie in (0, 1)")
    n = graph.n
    w = graph.weights
    out = w.sum(axis=1)
    dangling = out == 0.0
    transition = np.zeros((n, n))
    if n > 0:
        nz = ~dangling
        transition[nz] = w[nz] / out[nz, None]
        transition[dangling] = 1.0 / n

    scores = np.full(n, 1.0 / n)
    iterations = 0
    converged = False
    for iterations in range(1, max_iter + 1):
        updated = (1.0 - damping) / n + damping * (transition.T @ scores)
        if float(np.abs(updated - scores).sum()) < tol:
            scores = updated
            converged = True
            break
        scores = updated
    return TextRankResult(scores=scores, iterations=iterations, converged=converged)


def textrank_scores(
    graph: SegmentGraph,
    damping: float = 0.85,
    tol: float = 1e-8,
    max_iter: int = 200,
) -> np.ndarray:
    return textrank(graph, damping, tol, max_iter).scores


@dataclass(frozen=True)
class RankedPool:
    """Pooled segments with their importance scores (scores sum to 1)."""

    segments: tuple[tuple[SemanticSegment, float], ...]


def rank_pool(
    pool: Sequence[SemanticSegment],
    damping: float = 0.85,
    tol: float = 1e-8,
    max_iter: int = 200,
    embed: Callable[[str], np.ndarray] = embed_segment,
) -> tuple[RankedPool, TextRankResult]:
    graph = build_graph(pool, embed=embed)
    result = textrank(graph, damping, tol, max_iter)
    ranked = RankedPool(
        segments=tuple(zip(pool, (float(s) for s in result.scores)))
    )
    return ranked, result


def select_top(
    pool_with_scores: RankedPool, keep_ratio: float = 0.5
) -> list[SemanticSegment]:
    """Keep the max(1, ceil(keep_ratio * N)) highest-scoring segments.

    Exact ties at the cut go to the segment appearing earlier in the poem.
    The survivors are returned in document order.
    """
    if not 0.0 < keep_ratio <= 1.0:
        raise RatioOutOfRangeError(f"keep_ratio {keep_ratio} outside (0, 1]")
    entries = list(pool_with_scores.segments)
    k = max(1, math.ceil(keep_ratio * len(entries)))
    entries.sort(key=lambda item: (-item[1], item[0].position_key()))
    kept = [seg for seg, _ in entries[:k]]
    kept.sort(key=lambda seg: seg.position_key())
    return kept
