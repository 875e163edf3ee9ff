import pytest

from charlens import parse_annotations
from charlens.corpus import Span
from charlens.errors import CycleError, SelfMerge, UnknownCluster
from charlens.jsonio import canonical_bytes
from charlens.registry import CharacterRegistry

from conftest import payload_for, single_chapter_doc

# two names repeated so clusters have plenty of exact-offset material
TEXT = "Ada met Ben. Ada waved. Ben waved. Ada left. Ben left. Ada slept. Ben slept."


def _registry(cluster_spec, auto_promote=None):
    doc = single_chapter_doc(TEXT)
    specs = []
    cursor = 0
    sents = []
    for piece in TEXT.split(". "):
        words = piece.replace(".", "").split()
        toks = [(w, w.lower(), "PROPN" if w[0].isupper() else "VERB", len(words) - 1, "nsubj") for w in words]
        toks[-1] = (words[-1], words[-1].lower(), "VERB", len(words) - 1, "root")
        sents.append(toks)
    payload = payload_for(doc.text, sents, clusters=cluster_spec)
    layer = parse_annotations(canonical_bytes(payload), doc)
    return doc, layer, CharacterRegistry(layer, doc, auto_promote_threshold=auto_promote)


def _mentions(name, count):
    """Exact spans of the first `count` occurrences of `name` in TEXT."""
    spans = []
    at = -1
    for _ in range(count):
        at = TEXT.index(name, at + 1)
        spans.append([at, at + len(name)])
    return spans


def test_list_clusters_rows_and_samples():
    ada = _mentions("Ada", 4)
    ben = _mentions("Ben", 3)
    _doc, _layer, reg = _registry(
        [
            {"id": "ada", "mentions": ada, "source_chapter": 0, "hint": "Ada"},
            {"id": "ben", "mentions": ben, "source_chapter": 0, "hint": "Ben"},
        ]
    )
    rows = reg.list_clusters()
    assert len(rows) == 2
    assert rows[0]["cluster_id"] == "ada"  # earlier first mention
    assert rows[0]["samples"] == ["Ada", "Ada", "Ada", "Ada"]
    assert rows[0]["label"] == "unreviewed"


def test_sample_truncation_at_five():
    ada = _mentions("Ada", 4) + _mentions("Ben", 3)  # 7 mentions
    _doc, _layer, reg = _registry(
        [{"id": "big", "mentions": sorted(ada), "source_chapter": 0, "hint": None}]
    )
    assert len(reg.list_clusters()[0]["samples"]) == 5


def test_merge_disjoint_conservation():
    _doc, _layer, reg = _registry(
        [
            {"id": "a", "mentions": _mentions("Ada", 3), "source_chapter": 0, "hint": "Ada"},
            {"id": "b", "mentions": _mentions("Ben", 3) + [_mentions("Ada", 4)[3]], "source_chapter": 0, "hint": None},
        ]
    )
    reg.set_label("a", "character")
    reg.merge_clusters("b", "a")
    assert len(reg.character("a").mentions) == 7
    assert reg.list_clusters()[1]["merged_into"] == "a"


def test_merge_with_shared_span_dedupes():
    shared = _mentions("Ada", 3)
    _doc, _layer, reg = _registry(
        [
            {"id": "a", "mentions": shared, "source_chapter": 0, "hint": "Ada"},
            {"id": "b", "mentions": sorted(shared[2:] + _mentions("Ben", 3)), "source_chapter": 0, "hint": None},
        ]
    )
    reg.set_label("a", "character")
    reg.merge_clusters("b", "a")
    # 3 + 4 with one exact-span overlap
    assert len(reg.character("a").mentions) == 6


def test_self_merge_rejected():
    _doc, _layer, reg = _registry([{"id": "a", "mentions": _mentions("Ada", 1), "source_chapter": 0, "hint": None}])
    with pytest.raises(SelfMerge):
        reg.merge_clusters("a", "a")


def test_cycle_rejected():
    _doc, _layer, reg = _registry(
        [
            {"id": "a", "mentions": _mentions("Ada", 2), "source_chapter": 0, "hint": None},
            {"id": "b", "mentions": _mentions("Ben", 2), "source_chapter": 0, "hint": None},
        ]
    )
    reg.merge_clusters("a", "b")
    with pytest.raises(CycleError):
        reg.merge_clusters("b", "a")


def test_unknown_cluster_rejected():
    _doc, _layer, reg = _registry([{"id": "a", "mentions": _mentions("Ada", 1), "source_chapter": 0, "hint": None}])
    with pytest.raises(UnknownCluster):
        reg.merge_clusters("a", "ghost")
    with pytest.raises(UnknownCluster):
        reg.set_label("ghost", "character")


def test_context_label_routes_to_context_tags():
    _doc, _layer, reg = _registry(
        [{"id": "a", "mentions": _mentions("Ada", 2), "source_chapter": 0, "hint": "Ada"}]
    )
    reg.set_label("a", "context")
    assert reg.characters == ()
    assert [t.name for t in reg.context_tags] == ["Ada"]


def test_discarded_excluded_everywhere():
    _doc, _layer, reg = _registry(
        [{"id": "a", "mentions": _mentions("Ada", 2), "source_chapter": 0, "hint": "Ada"}]
    )
    reg.set_label("a", "discarded")
    assert reg.characters == ()
    assert reg.context_tags == ()
    assert reg.resolve(Span(*_mentions("Ada", 1)[0])) is None


def test_set_name_updates_display_name():
    _doc, _layer, reg = _registry(
        [{"id": "a", "mentions": _mentions("Ada", 2), "source_chapter": 0, "hint": "hint-name"}]
    )
    reg.set_label("a", "character")
    assert reg.character("a").display_name == "hint-name"
    reg.set_name("a", "Ada Lovelace")
    assert reg.character("a").display_name == "Ada Lovelace"


def test_merge_order_insensitive_at_root():
    def build():
        return _registry(
            [
                {"id": "a", "mentions": _mentions("Ada", 2), "source_chapter": 0, "hint": None},
                {"id": "b", "mentions": _mentions("Ben", 2), "source_chapter": 0, "hint": None},
                {"id": "c", "mentions": _mentions("Ada", 4)[2:], "source_chapter": 0, "hint": None},
            ]
        )

    _d, _l, r1 = build()
    r1.set_label("c", "character")
    r1.merge_clusters("a", "c")
    r1.merge_clusters("b", "c")
    _d, _l, r2 = build()
    r2.set_label("c", "character")
    r2.merge_clusters("b", "c")
    r2.merge_clusters("a", "c")
    assert r1.character("c").mentions == r2.character("c").mentions


def test_resolve_exact_and_containment(sample_layer, sample_doc, sample_registry):
    # exact: first "Anne Marlow" mention
    at = sample_doc.text.index("Anne Marlow")
    assert sample_registry.resolve(Span(at, at + len("Anne Marlow"))) == "c0-anne"
    # containment: "Captain James" heads at "Captain", which sits inside the
    # "Captain James Rook" mention
    cap = sample_doc.text.index("Captain James")
    assert sample_registry.resolve(Span(cap, cap + len("Captain James"))) == "c0-rook"
    # a span headed by its verb resolves to nothing
    assert sample_registry.resolve(Span(at, at + len("Anne Marlow lived"))) is None
    # pronoun inside a cluster mention resolves through containment
    she = sample_doc.text.index("She kept")
    assert sample_registry.resolve(Span(she, she + 3)) == "c0-anne"


def test_resolve_is_a_function(sample_registry, sample_layer):
    # the same span never maps to two characters across repeated calls
    for char in sample_registry.characters:
        for m in char.mentions[:5]:
            first = sample_registry.resolve(m)
            assert all(sample_registry.resolve(m) == first for _ in range(3))


def test_conflicting_span_flagged():
    shared = _mentions("Ada", 2)
    _doc, _layer, reg = _registry(
        [
            {"id": "a", "mentions": shared, "source_chapter": 0, "hint": None},
            {"id": "b", "mentions": [shared[0]] + _mentions("Ben", 1), "source_chapter": 0, "hint": None},
        ]
    )
    reg.set_label("a", "character")
    reg.set_label("b", "character")
    assert tuple(reg.conflicts()) == (tuple(shared[0]),)


def test_auto_promotion_threshold():
    clusters = [
        {"id": "big", "mentions": _mentions("Ada", 4), "source_chapter": 0, "hint": "Ada"},
        {"id": "small", "mentions": _mentions("Ben", 2), "source_chapter": 0, "hint": "Ben"},
    ]
    _doc, _layer, off = _registry(clusters)
    assert off.characters == ()
    _doc, _layer, on = _registry(clusters, auto_promote=3)
    assert [c.id for c in on.characters] == ["big"]
    assert on.character("big").provisional
    assert on.character("big").display_name == "Ada"


def test_suggest_merges_ranks_name_overlap(sample_registry):
    # fresh registry: the chapter-scoped Rook clusters share name tokens
    suggestions = CharacterRegistry(sample_registry.layer, sample_registry.doc).suggest_merges()
    pairs = {(s["source"], s["target"]) for s in suggestions}
    assert ("c1-anne", "c0-anne") in pairs or ("c2-anne", "c0-anne") in pairs
    scores = [s["score"] for s in suggestions]
    assert scores == sorted(scores, reverse=True)
