"""Shared fixtures: the annotated sample story and small payload builders."""

from __future__ import annotations

import pytest

from charlens import IngestConfig, ingest_text, parse_annotations
from charlens import sample as sample_mod
from charlens.registry import CharacterRegistry


@pytest.fixture(scope="session")
def story():
    return sample_mod.build()


@pytest.fixture(scope="session")
def sample_doc(story):
    return story.document()


@pytest.fixture(scope="session")
def sample_layer(story, sample_doc):
    return parse_annotations(story.payload, sample_doc)


@pytest.fixture()
def sample_registry(sample_layer, sample_doc):
    registry = CharacterRegistry(sample_layer, sample_doc)
    sample_mod.curate(registry)
    return registry


@pytest.fixture()
def sample_snapshot(story, sample_doc, sample_layer, sample_registry):
    from importlib import resources

    from charlens.analysis import AnalysisConfig, Snapshot, run_analysis
    from charlens.dynamics import parse_embeddings
    from charlens.lexicons import load_emotion_lexicon, load_sentiment_lexicon

    table = parse_embeddings(
        resources.files("charlens.data").joinpath("sample_embeddings.txt").read_text()
    )
    config = AnalysisConfig()
    result = run_analysis(
        sample_doc,
        sample_layer,
        sample_registry,
        config,
        sentiment_lexicon=load_sentiment_lexicon(),
        emotion_lexicon=load_emotion_lexicon(),
        table=table,
    )
    return Snapshot(
        doc=sample_doc,
        layer=sample_layer,
        registry=sample_registry,
        result=result,
        table=table,
        config=config,
    )


@pytest.fixture(scope="session")
def char_names(story, sample_doc):
    """Curated character id -> display name (session copy for read-only use)."""
    layer = parse_annotations(story.payload, sample_doc)
    registry = CharacterRegistry(layer, sample_doc)
    sample_mod.curate(registry)
    return {c.id: c.display_name for c in registry.characters}


def token_rows(doc_text: str, sent_specs, start_at: int = 0):
    """Token and sentence rows for an interchange payload, locating each
    surface in the text left to right (an offset oracle independent of any
    builder arithmetic)."""
    tokens = []
    sentences = []
    cursor = start_at
    for s_idx, spec in enumerate(sent_specs):
        chapter = 0
        if spec and isinstance(spec[-1], int):
            chapter = spec[-1]
            spec = spec[:-1]
        first = None
        last = None
        for surface, lemma, pos, head, deprel in spec:
            at = doc_text.index(surface, cursor)
            cursor = at + len(surface)
            if first is None:
                first = at
            last = cursor
            tokens.append(
                {
                    "start": at,
                    "end": cursor,
                    "surface": surface,
                    "lemma": lemma,
                    "pos": pos,
                    "head": head,
                    "deprel": deprel,
                    "sentence": s_idx,
                }
            )
        sentences.append({"start": first, "end": last, "chapter": chapter})
    return tokens, sentences


def payload_for(doc_text: str, sent_specs, clusters=None, propositions=None, scores=None):
    tokens, sentences = token_rows(doc_text, sent_specs)
    return {
        "format_version": 1,
        "tokens": tokens,
        "sentences": sentences,
        "clusters": clusters or [],
        "propositions": propositions or [],
        "scores": scores or [],
    }


def single_chapter_doc(text: str):
    return ingest_text(text, IngestConfig())
