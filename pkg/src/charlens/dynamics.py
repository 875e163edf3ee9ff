"""Temporal and distributional computations.

Chapter-to-chapter action change (cosine distance between mean embedding
vectors), moving-average sentiment smoothing, word-zone weights
(tf * 1/df), and seeded k-means for semantic word grouping. Everything here
is a pure function over immutable inputs; given the same seed the outputs
are bit-identical across runs.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .corpus import Document
from .errors import AllOutOfVocabulary, DimensionMismatch, ParseError, ZeroDocumentFrequency

log = logging.getLogger(__name__)

#: Below this chapter / token count a story counts as "short" and gets the
#: narrow smoothing window.
SHORT_STORY_CHAPTERS = 3
SHORT_STORY_TOKENS = 10_000

UNCLUSTERED = -1

KMEANS_MAX_ITER = 100
KMEANS_REL_TOL = 1e-6


@dataclass(frozen=True)
class EmbeddingTable:
    dimension: int
    vectors: dict[str, np.ndarray]

    def __contains__(self, word: str) -> bool:
        return word in self.vectors

    def __len__(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class SmoothingConfig:
    window: int = 3  # positive odd integer; centered window with edge shrink

    def __post_init__(self):
        if self.window < 1 or self.window % 2 == 0:
            raise ValueError(f"window must be a positive odd integer, got {self.window}")


@dataclass(frozen=True)
class ClusterConfig:
    seed: int = 13
    k: int | None = None  # None: min(6, max(1, ceil(n/8)))


@dataclass(frozen=True)
class MeanVector:
    vector: np.ndarray
    coverage: float  # in-vocabulary fraction of the input multiset


@dataclass(frozen=True)
class WordZoneEntry:
    lemma: str
    weight: float  # tf * (1/df), in (0, 1] when df >= tf
    tf: int
    df: int
    cluster: int
    rank: int

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "weight": self.weight,
            "tf": self.tf,
            "df": self.df,
            "cluster": self.cluster,
            "rank": self.rank,
        }


def load_embeddings(path: str | Path) -> EmbeddingTable:
    """Read an embedding table file; see :func:`parse_embeddings`."""
    return parse_embeddings(Path(path).read_text(encoding="utf-8"))


def parse_embeddings(text: str) -> EmbeddingTable:
    """Parse a plain-text table, one ``token v1 .. vd`` line each.

    All rows must share one dimension; duplicate tokens keep the first
    occurrence; zero vectors are skipped (cosine against them is undefined).
    """
    vectors: dict[str, np.ndarray] = {}
    dimension: int | None = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ParseError("expected 'token v1 .. vd'", location=f"line {lineno}")
        token = parts[0]
        try:
            values = np.array([float(p) for p in parts[1:]], dtype=np.float64)
        except ValueError as exc:
            raise ParseError(f"non-numeric vector component: {exc}", location=f"line {lineno}") from exc
        if dimension is None:
            dimension = values.size
        elif values.size != dimension:
            raise DimensionMismatch(
                f"line has {values.size} components, table dimension is {dimension}",
                location=f"line {lineno}",
            )
        if token in vectors:
            log.warning("duplicate embedding token %r at line %d; keeping first", token, lineno)
            continue
        if not np.any(values):
            log.warning("zero vector for token %r at line %d; skipped", token, lineno)
            continue
        vectors[token] = values
    if dimension is None:
        raise ParseError("embedding table is empty")
    return EmbeddingTable(dimension=dimension, vectors=vectors)


def mean_vector(words: list[str], table: EmbeddingTable) -> MeanVector:
    """Arithmetic mean of the in-vocabulary word vectors (multiset: repeats
    count repeatedly); out-of-vocabulary words only lower the coverage."""
    hits = [table.vectors[w] for w in words if w in table.vectors]
    if not hits:
        raise AllOutOfVocabulary(f"none of {len(words)} words are in the embedding table")
    return MeanVector(vector=np.mean(hits, axis=0), coverage=len(hits) / len(words))


def cosine_similarity(a: np.ndarray, b: np.ndarray) -> float:
    denom = float(np.linalg.norm(a) * np.linalg.norm(b))
    if denom == 0.0:
        return 0.0
    return float(np.dot(a, b) / denom)


def action_change(
    prev_actions: list[str], cur_actions: list[str], table: EmbeddingTable
) -> float | None:
    """Change between consecutive chapters' action sets: cosine distance
    between the mean vectors, clamped to [0, 1] (0 = no change, 1 = highest).

    Returns None when either side has no in-vocabulary words (the cell is
    not covered).
    """
    try:
        prev = mean_vector(prev_actions, table) if prev_actions else None
        cur = mean_vector(cur_actions, table) if cur_actions else None
    except AllOutOfVocabulary:
        return None
    if prev is None or cur is None:
        return None
    if np.array_equal(prev.vector, cur.vector):
        return 0.0
    distance = 1.0 - cosine_similarity(prev.vector, cur.vector)
    if distance > 1.0:
        log.info("anti-parallel action means; clamping change %.4f to 1.0", distance)
    return min(max(distance, 0.0), 1.0)


def rank_dissimilar_pairs(
    prev_actions: list[str], cur_actions: list[str], table: EmbeddingTable, limit: int
) -> list[tuple[str, str, float]]:
    """Pair each current action with its most similar previous action and
    list the pairs by ascending similarity (most dissimilar first)."""
    prev_vocab = sorted({w for w in prev_actions if w in table.vectors})
    cur_vocab = sorted({w for w in cur_actions if w in table.vectors})
    if not prev_vocab or not cur_vocab or limit <= 0:
        return []
    pairs = []
    for cur in cur_vocab:
        best_word, best_sim = None, -2.0
        for prev in prev_vocab:
            sim = cosine_similarity(table.vectors[cur], table.vectors[prev])
            if sim > best_sim:
                best_word, best_sim = prev, sim
        pairs.append((cur, best_word, best_sim))
    pairs.sort(key=lambda p: (p[2], p[0]))
    return pairs[:limit]


def smooth_sentiment(series: list[float], cfg: SmoothingConfig) -> list[float]:
    """Centered moving average; edge windows shrink to the available indices
    so the output length equals the input length."""
    radius = (cfg.window - 1) // 2
    n = len(series)
    out = []
    for i in range(n):
        lo = max(0, i - radius)
        hi = min(n, i + radius + 1)
        window = series[lo:hi]
        out.append(sum(window) / len(window))
    return out


def choose_window(doc: Document, override: int | None = None) -> int:
    """Smoothing window: 5 for a full-length story, 3 for a short one
    (fewer than 3 chapters or under 10k whitespace tokens)."""
    if override is not None:
        return override
    token_count = len(doc.text.split())
    if len(doc.chapters) < SHORT_STORY_CHAPTERS or token_count < SHORT_STORY_TOKENS:
        return 3
    return 5


def word_weight(word: str, character_counts: dict[str, int], story_counts: dict[str, int]) -> float:
    """Word-zone display weight: tf(w, c) * (1 / df(w))."""
    tf = character_counts.get(word, 0)
    df = story_counts.get(word, 0)
    if df <= 0:
        raise ZeroDocumentFrequency(f"word {word!r} has no story-level occurrences")
    if tf < 1 or df < tf:
        raise ValueError(f"inconsistent counts for {word!r}: tf={tf}, df={df}")
    return tf / df


def _kmeans_plusplus(points: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = points.shape[0]
    centers = np.empty((k, points.shape[1]), dtype=points.dtype)
    centers[0] = points[int(rng.integers(n))]
    closest = np.sum((points - centers[0]) ** 2, axis=1)
    for i in range(1, k):
        total = closest.sum()
        if total <= 0.0:
            centers[i] = points[int(rng.integers(n))]
        else:
            centers[i] = points[int(rng.choice(n, p=closest / total))]
        closest = np.minimum(closest, np.sum((points - centers[i]) ** 2, axis=1))
    return centers


def cluster_words(
    words: list[str], table: EmbeddingTable | None, cfg: ClusterConfig | None = None
) -> dict[str, int]:
    """Group words into semantic clusters by seeded k-means.

    Vectors are L2-normalized before clustering; k defaults to
    min(6, max(1, ceil(n/8))) over the n in-vocabulary words and never
    exceeds n. Out-of-vocabulary words (or all words, when no table is
    loaded) get the reserved unclustered id -1.
    """
    cfg = cfg or ClusterConfig()
    unique = sorted(set(words))
    if table is None:
        return {w: UNCLUSTERED for w in unique}
    vocab = [w for w in unique if w in table.vectors]
    assignment = {w: UNCLUSTERED for w in unique}
    if not vocab:
        return assignment

    points = np.stack([table.vectors[w] for w in vocab])
    points = points / np.linalg.norm(points, axis=1, keepdims=True)
    n = len(vocab)
    k = cfg.k if cfg.k is not None else min(6, max(1, math.ceil(n / 8)))
    k = max(1, min(k, n))

    rng = np.random.default_rng(cfg.seed)
    centers = _kmeans_plusplus(points, k, rng)
    labels = np.zeros(n, dtype=np.int64)
    prev_objective = math.inf
    for _ in range(KMEANS_MAX_ITER):
        distances = np.sum((points[:, None, :] - centers[None, :, :]) ** 2, axis=2)
        labels = np.argmin(distances, axis=1)
        objective = float(np.sum(distances[np.arange(n), labels]))
        for j in range(k):
            mask = labels == j
            if np.any(mask):
                centers[j] = points[mask].mean(axis=0)
            # empty clusters keep their previous center
        if prev_objective - objective < KMEANS_REL_TOL * max(prev_objective, 1e-12):
            break
        prev_objective = objective

    for w, label in zip(vocab, labels):
        assignment[w] = int(label)
    return assignment
