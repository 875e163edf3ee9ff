import itertools
import math
import random

import numpy as np
import pytest

from charlens.corpus import IngestConfig, ingest_text
from charlens.dynamics import (
    ClusterConfig,
    EmbeddingTable,
    SmoothingConfig,
    action_change,
    choose_window,
    cluster_words,
    cosine_similarity,
    load_embeddings,
    mean_vector,
    parse_embeddings,
    rank_dissimilar_pairs,
    smooth_sentiment,
    word_weight,
)
from charlens.errors import (
    AllOutOfVocabulary,
    DimensionMismatch,
    ParseError,
    ZeroDocumentFrequency,
)


def table(**vectors) -> EmbeddingTable:
    dim = len(next(iter(vectors.values())))
    return EmbeddingTable(dimension=dim, vectors={k: np.array(v, dtype=float) for k, v in vectors.items()})


# ---------------------------------------------------------------------------
# embedding table loading


def test_parse_two_lines():
    t = parse_embeddings("run 1 0 0\njump 0 1 0\n")
    assert t.dimension == 3
    assert set(t.vectors) == {"run", "jump"}


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        parse_embeddings("run 1 0 0\njump 0 1\n")


def test_duplicate_keeps_first():
    t = parse_embeddings("run 1 0\nrun 0 1\n")
    assert list(t.vectors["run"]) == [1.0, 0.0]


def test_zero_vector_skipped():
    t = parse_embeddings("run 1 0\nnull 0 0\n")
    assert "null" not in t.vectors


def test_non_numeric_rejected():
    with pytest.raises(ParseError):
        parse_embeddings("run a b\n")


def test_empty_table_rejected():
    with pytest.raises(ParseError):
        parse_embeddings("\n\n")


def test_load_from_file(tmp_path):
    p = tmp_path / "emb.txt"
    p.write_text("walk 0.5 0.5\n")
    assert load_embeddings(p).dimension == 2


def test_bundled_sample_table():
    from importlib import resources

    text = resources.files("charlens.data").joinpath("sample_embeddings.txt").read_text()
    t = parse_embeddings(text)
    assert t.dimension == 6
    assert "say" in t.vectors and "walk" in t.vectors


# ---------------------------------------------------------------------------
# mean vector


def test_mean_single_word():
    got = mean_vector(["run"], table(run=(1, 0)))
    assert list(got.vector) == [1.0, 0.0]
    assert got.coverage == 1.0


def test_mean_two_words():
    got = mean_vector(["run", "jump"], table(run=(1, 0), jump=(0, 1)))
    assert list(got.vector) == [0.5, 0.5]


def test_mean_skips_oov_with_coverage():
    got = mean_vector(["run", "zzz"], table(run=(1, 0)))
    assert list(got.vector) == [1.0, 0.0]
    assert got.coverage == 0.5


def test_mean_multiset_counts_repeats():
    got = mean_vector(["run", "run", "jump"], table(run=(1, 0), jump=(0, 1)))
    assert got.vector == pytest.approx([2 / 3, 1 / 3])


def test_mean_all_oov():
    with pytest.raises(AllOutOfVocabulary):
        mean_vector(["zzz"], table(run=(1, 0)))


# ---------------------------------------------------------------------------
# action change


def test_identical_sets_no_change():
    t = table(run=(1, 0), jump=(0, 1))
    assert action_change(["run", "jump"], ["run", "jump"], t) == 0.0


def test_orthogonal_sets_max_change():
    t = table(run=(1, 0), fly=(0, 1))
    assert action_change(["run"], ["fly"], t) == pytest.approx(1.0)


def test_hand_cosine_case():
    t = table(run=(1, 0), jump=(0, 1))
    got = action_change(["run"], ["run", "jump"], t)
    assert got == pytest.approx(1 - 1 / math.sqrt(2), abs=1e-9)
    assert got == pytest.approx(0.2929, abs=1e-4)


def test_change_symmetry_and_range():
    rng = random.Random(7)
    t = table(**{f"w{i}": [rng.uniform(-1, 1) for _ in range(4)] for i in range(12)})
    words = sorted(t.vectors)
    for _ in range(200):
        a = rng.sample(words, rng.randint(1, 5))
        b = rng.sample(words, rng.randint(1, 5))
        ab = action_change(a, b, t)
        ba = action_change(b, a, t)
        assert ab == ba
        assert 0.0 <= ab <= 1.0


def test_uncovered_cases():
    t = table(run=(1, 0))
    assert action_change([], ["run"], t) is None
    assert action_change(["zzz"], ["run"], t) is None


def test_antiparallel_clamped_to_one():
    t = table(up=(1, 0), down=(-1, 0))
    assert action_change(["up"], ["down"], t) == 1.0


def test_cosine_within_unit_interval_tolerance():
    rng = random.Random(3)
    for _ in range(500):
        a = np.array([rng.uniform(-2, 2) for _ in range(5)])
        b = np.array([rng.uniform(-2, 2) for _ in range(5)])
        c = cosine_similarity(a, b)
        assert -1.0 - 1e-9 <= c <= 1.0 + 1e-9


# ---------------------------------------------------------------------------
# dissimilar pairs


def test_single_identical_pair():
    t = table(run=(1, 0))
    assert rank_dissimilar_pairs(["run"], ["run"], t, 5) == [("run", "run", pytest.approx(1.0))]


def test_orthogonal_first():
    t = table(run=(1, 0, 0), walk=(0.9, 0.1, 0), fly=(0, 0, 1))
    pairs = rank_dissimilar_pairs(["run", "walk"], ["fly", "run"], t, 5)
    assert pairs[0][0] == "fly"
    assert pairs[0][2] == pytest.approx(0.0)
    # exhaustive oracle: each current word pairs with its max-cosine previous
    for cur, prev, sim in pairs:
        best = max(
            (cosine_similarity(t.vectors[cur], t.vectors[p]) for p in ["run", "walk"]),
        )
        assert sim == pytest.approx(best)


def test_limit_zero_empty():
    t = table(run=(1, 0))
    assert rank_dissimilar_pairs(["run"], ["run"], t, 0) == []


# ---------------------------------------------------------------------------
# smoothing


def test_constant_series_fixed_point():
    for n in (1, 3, 5):
        assert smooth_sentiment([1.0] * 5, SmoothingConfig(window=n)) == [1.0] * 5


def test_ramp_n3():
    assert smooth_sentiment([0, 1, 2, 3, 4], SmoothingConfig(window=3)) == [0.5, 1, 2, 3, 3.5]


def test_window_one_identity():
    series = [0.3, -0.2, 0.9]
    assert smooth_sentiment(series, SmoothingConfig(window=1)) == series


def test_even_window_rejected():
    with pytest.raises(ValueError):
        SmoothingConfig(window=4)


def test_length_and_bounds_random():
    rng = random.Random(11)
    for _ in range(100):
        series = [rng.uniform(-1, 1) for _ in range(rng.randint(1, 40))]
        for n in (1, 3, 5, 7):
            out = smooth_sentiment(series, SmoothingConfig(window=n))
            assert len(out) == len(series)
            assert min(series) - 1e-12 <= min(out) and max(out) <= max(series) + 1e-12


def test_direct_window_recomputation_oracle():
    rng = random.Random(13)
    series = [rng.uniform(-1, 1) for _ in range(25)]
    n = 5
    out = smooth_sentiment(series, SmoothingConfig(window=n))
    for i in range(len(series)):
        window = [series[j] for j in range(len(series)) if abs(j - i) <= (n - 1) // 2]
        assert out[i] == pytest.approx(sum(window) / len(window), abs=1e-12)


# ---------------------------------------------------------------------------
# window choice


def test_full_length_story_window(story):
    body = ("word " * 11000) + "\n"
    text = "".join(f"CHAPTER {i}\n{body}" for i in range(1, 25))
    doc = ingest_text(text, IngestConfig())
    assert len(doc.chapters) == 24
    assert choose_window(doc) == 5


def test_short_story_window():
    doc = ingest_text("A single chapter story with few words.")
    assert choose_window(doc) == 3


def test_window_override():
    doc = ingest_text("Tiny.")
    assert choose_window(doc, override=7) == 7


def test_sample_story_is_short(sample_doc):
    assert choose_window(sample_doc) == 3  # 3 chapters but far under 10k tokens


# ---------------------------------------------------------------------------
# word weight


def test_weight_formula():
    assert word_weight("w", {"w": 4}, {"w": 16}) == 0.25
    assert word_weight("w", {"w": 1}, {"w": 1}) == 1.0
    assert word_weight("w", {"w": 3}, {"w": 3}) == 1.0


def test_weight_zero_df():
    with pytest.raises(ZeroDocumentFrequency):
        word_weight("w", {"w": 1}, {})


def test_weight_inconsistent_counts():
    with pytest.raises(ValueError):
        word_weight("w", {"w": 5}, {"w": 3})


def test_weight_at_most_one():
    rng = random.Random(5)
    for _ in range(100):
        tf = rng.randint(1, 50)
        df = tf + rng.randint(0, 50)
        assert 0 < word_weight("w", {"w": tf}, {"w": df}) <= 1.0


# ---------------------------------------------------------------------------
# clustering


def test_single_word_cluster_zero():
    t = table(run=(1, 0))
    assert cluster_words(["run"], t) == {"run": 0}


def test_all_oov_unclustered():
    t = table(run=(1, 0))
    assert cluster_words(["aaa", "bbb"], t) == {"aaa": -1, "bbb": -1}


def test_no_table_unclustered():
    assert cluster_words(["aaa"], None) == {"aaa": -1}


def test_two_tight_groups_match_best_partition():
    vectors = {
        "a1": (1.0, 0.02, 0.0), "a2": (0.99, -0.01, 0.01), "a3": (1.01, 0.0, -0.02),
        "b1": (0.0, 1.0, 0.01), "b2": (0.02, 0.98, 0.0), "b3": (-0.01, 1.02, 0.01),
    }
    t = table(**vectors)
    words = sorted(vectors)
    got = cluster_words(words, t, ClusterConfig(seed=0, k=2))
    groups = {}
    for w, c in got.items():
        groups.setdefault(c, set()).add(w)
    # brute-force best 2-partition by k-means objective over normalized points
    pts = {w: np.array(v) / np.linalg.norm(v) for w, v in vectors.items()}

    def objective(partition):
        total = 0.0
        for side in partition:
            if not side:
                return math.inf
            center = np.mean([pts[w] for w in side], axis=0)
            total += sum(np.sum((pts[w] - center) ** 2) for w in side)
        return total

    best = min(
        ((set(combo), set(words) - set(combo)) for r in range(1, 6) for combo in itertools.combinations(words, r)),
        key=objective,
    )
    assert {frozenset(g) for g in groups.values()} == {frozenset(best[0]), frozenset(best[1])}


def test_cluster_determinism():
    rng = random.Random(23)
    vectors = {f"w{i}": [rng.uniform(-1, 1) for _ in range(6)] for i in range(30)}
    t = table(**vectors)
    words = sorted(vectors)
    first = cluster_words(words, t, ClusterConfig(seed=42))
    for _ in range(3):
        assert cluster_words(words, t, ClusterConfig(seed=42)) == first


def test_default_k_rule():
    rng = random.Random(29)
    vectors = {f"w{i}": [rng.uniform(-1, 1) for _ in range(4)] for i in range(20)}
    t = table(**vectors)
    got = cluster_words(sorted(vectors), t)  # ceil(20/8) = 3 clusters
    assert len(set(got.values())) <= 3
