"""Word-list scoring resources.

Two TSV formats back the interpretable scoring path: a sentiment lexicon
(``lemma<TAB>score`` with scores in [-4, +4]) and an emotion lexicon
(``lemma<TAB>category`` over the six fixed categories). Small curated
defaults ship with the package so analysis runs without external files.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .annotations import EMOTIONS
from .errors import ParseError, RangeError

SENTIMENT_MIN, SENTIMENT_MAX = -4.0, 4.0


def _read_lines(path: str | Path | None, default_name: str) -> list[str]:
    if path is None:
        data = resources.files("charlens.data").joinpath(default_name).read_text(encoding="utf-8")
    else:
        data = Path(path).read_text(encoding="utf-8")
    return data.splitlines()


def load_sentiment_lexicon(path: str | Path | None = None) -> dict[str, float]:
    """Load ``lemma<TAB>score`` rows; ``path=None`` loads the bundled set."""
    lexicon: dict[str, float] = {}
    for lineno, line in enumerate(_read_lines(path, "sentiment.tsv"), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError(f"expected 'lemma<TAB>score'", location=f"line {lineno}")
        lemma, raw = parts
        try:
            score = float(raw)
        except ValueError as exc:
            raise ParseError(f"score {raw!r} is not a number", location=f"line {lineno}") from exc
        if not SENTIMENT_MIN <= score <= SENTIMENT_MAX:
            raise RangeError(f"score {score} outside [{SENTIMENT_MIN}, {SENTIMENT_MAX}]", location=f"line {lineno}")
        lexicon.setdefault(lemma.strip().lower(), score)
    return lexicon


def load_emotion_lexicon(path: str | Path | None = None) -> dict[str, str]:
    """Load ``lemma<TAB>category`` rows; ``path=None`` loads the bundled set."""
    lexicon: dict[str, str] = {}
    for lineno, line in enumerate(_read_lines(path, "emotions.tsv"), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError(f"expected 'lemma<TAB>category'", location=f"line {lineno}")
        lemma, category = parts[0].strip().lower(), parts[1].strip().lower()
        if category not in EMOTIONS:
            raise RangeError(f"unknown emotion category {category!r}", location=f"line {lineno}")
        lexicon.setdefault(lemma, category)
    return lexicon
