"""Build an interchange payload from raw story text.

The adapter is the only place allowed to touch NLP runtimes. Two backends:
``rule`` (built in, deterministic, no downloads) and ``spacy`` (used when a
spaCy model is importable). Both run chapter by chapter, so coreference
clusters are chapter-scoped by construction and never merged here; merging
is the reviewer's job in the engine.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import pipeline_rule as rule
from .segmentation import DEFAULT_HEADING_PATTERN, ChapterSlice, normalize, segment


class AdapterError(Exception):
    pass


@dataclass
class AdapterConfig:
    pipeline: str = "rule"  # rule | spacy
    heading_pattern: str = DEFAULT_HEADING_PATTERN
    sentiment: bool = False  # fill scores[] with the naive polarity model
    spacy_model: str = "en_core_web_sm"

    @classmethod
    def from_file(cls, path) -> "AdapterConfig":
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
        cfg = cls()
        for key, value in data.items():
            if not hasattr(cfg, key):
                raise AdapterError(f"unknown config key {key!r}")
            setattr(cfg, key, value)
        return cfg


def _emit_chapter_rule(text: str, chapter: ChapterSlice, sentence_offset: int, cfg: AdapterConfig):
    tokens = rule.tokenize(text, chapter.start, chapter.end)
    sentences = rule.split_sentences(tokens)
    for sent in sentences:
        rule.tag(sent)
    rule.promote_recurring_names(sentences)
    for sent in sentences:
        rule.parse(sent)

    token_rows = []
    sentence_rows = []
    score_rows = []
    for k, sent in enumerate(sentences):
        index = sentence_offset + k
        sentence_rows.append({"start": sent[0]["start"], "end": sent[-1]["end"], "chapter": chapter.index})
        for local, tok in enumerate(sent):
            token_rows.append(
                {
                    "start": tok["start"],
                    "end": tok["end"],
                    "surface": tok["surface"],
                    "lemma": tok["lemma"],
                    "pos": tok["pos"],
                    "head": tok["head"],
                    "deprel": tok["deprel"],
                    "sentence": index,
                }
            )
        if cfg.sentiment:
            score_rows.append({"sentence": index, "sentiment": rule.naive_sentiment(sent)})
    clusters = rule.name_clusters(sentences, chapter)
    props = rule.subject_verb_propositions(sentences, sentence_offset)
    return token_rows, sentence_rows, clusters, props, score_rows


def _load_spacy(cfg: AdapterConfig):
    try:
        import spacy
    except ImportError as exc:
        raise AdapterError("spaCy is not installed; use --pipeline rule") from exc
    try:
        return spacy.load(cfg.spacy_model)
    except OSError as exc:
        raise AdapterError(f"spaCy model {cfg.spacy_model!r} is not available") from exc


def _emit_chapter_spacy(nlp, text: str, chapter: ChapterSlice, sentence_offset: int, cfg: AdapterConfig):
    body = text[chapter.start : chapter.end]
    doc = nlp(body)
    token_rows = []
    sentence_rows = []
    entity_runs: dict[str, list[list[int]]] = {}
    index = sentence_offset
    for sent in doc.sents:
        sent_tokens = [t for t in sent if not t.is_space]
        if not sent_tokens:
            continue
        local_of = {t.i: j for j, t in enumerate(sent_tokens)}
        sentence_rows.append(
            {
                "start": chapter.start + sent_tokens[0].idx,
                "end": chapter.start + sent_tokens[-1].idx + len(sent_tokens[-1].text),
                "chapter": chapter.index,
            }
        )
        for t in sent_tokens:
            head_local = local_of.get(t.head.i, local_of[t.i])
            token_rows.append(
                {
                    "start": chapter.start + t.idx,
                    "end": chapter.start + t.idx + len(t.text),
                    "surface": t.text,
                    "lemma": t.lemma_.lower(),
                    "pos": t.pos_ if t.pos_ != "SPACE" else "X",
                    "head": local_of[t.i] if t.head is t or t.dep_ == "ROOT" else head_local,
                    "deprel": "root" if t.dep_ == "ROOT" else t.dep_.lower(),
                    "sentence": index,
                }
            )
        index += 1
    for ent in doc.ents:
        if ent.label_ in ("PERSON", "GPE", "LOC", "FAC", "ORG"):
            key = f"{ent.label_}:{ent.text.lower()}"
            entity_runs.setdefault(key, []).append(
                [chapter.start + ent.start_char, chapter.start + ent.end_char]
            )
    clusters = []
    for n, (key, mentions) in enumerate(sorted(entity_runs.items())):
        unique = sorted({tuple(m) for m in mentions})
        clusters.append(
            {
                "id": f"ch{chapter.index}-e{n}",
                "mentions": [list(m) for m in unique],
                "source_chapter": chapter.index,
                "hint": key.split(":", 1)[1].title(),
            }
        )
    return token_rows, sentence_rows, clusters, [], []


def adapt(raw_text: str, cfg: AdapterConfig | None = None) -> dict:
    """Convert raw story text into an interchange payload dict."""
    cfg = cfg or AdapterConfig()
    if not raw_text or not raw_text.strip():
        raise AdapterError("input text is empty")
    text = normalize(raw_text)
    chapters = segment(text, cfg.heading_pattern)

    nlp = _load_spacy(cfg) if cfg.pipeline == "spacy" else None
    if cfg.pipeline not in ("rule", "spacy"):
        raise AdapterError(f"unknown pipeline {cfg.pipeline!r}")

    tokens: list[dict] = []
    sentences: list[dict] = []
    clusters: list[dict] = []
    propositions: list[dict] = []
    scores: list[dict] = []
    for chapter in chapters:
        emit = _emit_chapter_spacy if nlp else _emit_chapter_rule
        args = (nlp, text, chapter, len(sentences), cfg) if nlp else (text, chapter, len(sentences), cfg)
        t_rows, s_rows, c_rows, p_rows, score_rows = emit(*args)
        tokens.extend(t_rows)
        sentences.extend(s_rows)
        clusters.extend(c_rows)
        propositions.extend(p_rows)
        scores.extend(score_rows)

    payload = {
        "format_version": 1,
        "tokens": tokens,
        "sentences": sentences,
        "clusters": clusters,
        "propositions": propositions,
        "scores": scores,
    }
    _self_check(text, payload)
    return payload


def _self_check(text: str, payload: dict) -> None:
    """Abort on any offset inconsistency before the payload leaves the
    adapter; a validation failure downstream is an adapter bug."""
    for row in payload["tokens"]:
        if text[row["start"] : row["end"]] != row["surface"]:
            raise AdapterError(
                f"offset inconsistency at {row['start']}: {row['surface']!r} != "
                f"{text[row['start']:row['end']]!r}"
            )
    starts = {t["start"] for t in payload["tokens"]}
    ends = {t["end"] for t in payload["tokens"]}
    for cluster in payload["clusters"]:
        for start, end in cluster["mentions"]:
            if start not in starts or end not in ends:
                raise AdapterError(f"cluster {cluster['id']} mention [{start},{end}) not token-aligned")
    for row in payload["scores"]:
        if row.get("sentiment") is not None and not -1.0 <= row["sentiment"] <= 1.0:
            raise AdapterError(f"sentiment out of range for sentence {row['sentence']}")


def adapt_to_bytes(raw_text: str, cfg: AdapterConfig | None = None) -> bytes:
    return json.dumps(adapt(raw_text, cfg), sort_keys=True, ensure_ascii=False, separators=(",", ":")).encode(
        "utf-8"
    )
