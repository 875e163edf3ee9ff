"""Hand-annotated sample story.

A three-chapter miniature (60 sentences) with complete standoff
annotations: tokens with dependency parses, chapter-scoped coreference
clusters, predicate-argument propositions for about half the sentences, and
a couple of external score rows. The module also carries the hand-made gold
labels (quotes with speakers, agent-verb pairs, adjective-subject pairs,
per-chapter mention counts) that the test suite scores the extractors
against, plus the canonical curation script that turns the raw clusters
into the three named characters.

Everything is built programmatically so the text offsets and the
annotations can never drift apart; the builder asserts every mention and
argument span against its expected surface.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Document, IngestConfig, ingest_text
from .jsonio import canonical_bytes
from .registry import CharacterRegistry

_NO_SPACE_BEFORE = {",", ".", "!", "?", ";", ":", "”", "’"}
_NO_SPACE_AFTER = {"“", "‘"}

OPEN_Q = "“"
CLOSE_Q = "”"


@dataclass
class SampleStory:
    text: str
    payload: bytes  # annotation interchange JSON
    gold_quotes: list[dict]  # {span: [s,e], sentence, speaker: name | None}
    gold_actions: set[tuple[str, str, int]]  # (character name, verb lemma, sentence)
    gold_definitions: set[tuple[str, str, int]]  # (character name, adjective lemma, sentence)
    gold_presence: dict[str, dict[int, int]]  # character name -> chapter -> mentions
    gold_context_presence: dict[str, dict[int, int]]
    sentence_chapters: list[int]

    def document(self) -> Document:
        return ingest_text(self.text, IngestConfig(), doc_id="sample-story")


class _Builder:
    def __init__(self):
        self.parts: list[str] = []
        self.cursor = 0
        self.chapter = -1
        self.sentences: list[dict] = []
        self.tokens: list[dict] = []
        self.token_spans: list[list[tuple[int, int]]] = []  # per sentence
        self.fresh_block = False

    def _append(self, piece: str) -> int:
        start = self.cursor
        self.parts.append(piece)
        self.cursor += len(piece)
        return start

    def heading(self, label: str, title: str):
        if self.chapter >= 0:
            self._append("\n\n")
        self._append(f"CHAPTER {label}\n{title}\n\n")
        self.chapter += 1
        self.fresh_block = True

    def sent(self, tokens: list[tuple[str, str, str, int, str]], para: bool = False) -> int:
        """Add one sentence; tokens are (surface, lemma, pos, head, deprel)."""
        if self.fresh_block:
            self.fresh_block = False
        elif para:
            self._append("\n\n")
        else:
            self._append(" ")
        spans = []
        prev_surface: str | None = None
        for surface, _lemma, _pos, _head, _deprel in tokens:
            if prev_surface is not None and surface not in _NO_SPACE_BEFORE and prev_surface not in _NO_SPACE_AFTER:
                self._append(" ")
            start = self._append(surface)
            spans.append((start, start + len(surface)))
            prev_surface = surface
        index = len(self.sentences)
        for (surface, lemma, pos, head, deprel), (start, end) in zip(tokens, spans):
            if not 0 <= head < len(tokens):
                raise AssertionError(f"sentence {index}: head {head} out of range")
            self.tokens.append(
                {
                    "start": start,
                    "end": end,
                    "surface": surface,
                    "lemma": lemma,
                    "pos": pos,
                    "head": head,
                    "deprel": deprel,
                    "sentence": index,
                }
            )
        self.sentences.append({"start": spans[0][0], "end": spans[-1][1], "chapter": self.chapter})
        self.token_spans.append(spans)
        return index

    def text(self) -> str:
        return "".join(self.parts)

    def span_of(self, sentence: int, lo: int, hi: int, expect: str) -> tuple[int, int]:
        start = self.token_spans[sentence][lo][0]
        end = self.token_spans[sentence][hi - 1][1]
        got = self.text()[start:end]
        if got != expect:
            raise AssertionError(f"sentence {sentence} tokens [{lo}:{hi}]: expected {expect!r}, got {got!r}")
        return start, end


def build() -> SampleStory:
    b = _Builder()

    # ---------------------------------------------------------------- ch. I
    b.heading("I", "The Letter")
    # S0: Anne Marlow lived in Harborside.
    b.sent([
        ("Anne", "anne", "PROPN", 2, "nsubj"),
        ("Marlow", "marlow", "PROPN", 0, "flat"),
        ("lived", "live", "VERB", 2, "root"),
        ("in", "in", "ADP", 4, "case"),
        ("Harborside", "harborside", "PROPN", 2, "obl"),
        (".", ".", "PUNCT", 2, "punct"),
    ])
    # S1: The town was quiet in winter.
    b.sent([
        ("The", "the", "DET", 1, "det"),
        ("town", "town", "NOUN", 3, "nsubj"),
        ("was", "be", "AUX", 3, "cop"),
        ("quiet", "quiet", "ADJ", 3, "root"),
        ("in", "in", "ADP", 5, "case"),
        ("winter", "winter", "NOUN", 3, "obl"),
        (".", ".", "PUNCT", 3, "punct"),
    ])
    # S2: She kept the old lighthouse with her aunt.
    b.sent([
        ("She", "she", "PRON", 1, "nsubj"),
        ("kept", "keep", "VERB", 1, "root"),
        ("the", "the", "DET", 4, "det"),
        ("old", "old", "ADJ", 4, "amod"),
        ("lighthouse", "lighthouse", "NOUN", 1, "obj"),
        ("with", "with", "ADP", 7, "case"),
        ("her", "her", "PRON", 7, "nmod:poss"),
        ("aunt", "aunt", "NOUN", 1, "obl"),
        (".", ".", "PUNCT", 1, "punct"),
    ])
    # S3: The work made her arms strong.
    b.sent([
        ("The", "the", "DET", 1, "det"),
        ("work", "work", "NOUN", 2, "nsubj"),
        ("made", "make", "VERB", 2, "root"),
        ("her", "her", "PRON", 4, "nmod:poss"),
        ("arms", "arm", "NOUN", 2, "obj"),
        ("strong", "strong", "ADJ", 2, "xcomp"),
        (".", ".", "PUNCT", 2, "punct"),
    ])
    # S4: One morning a letter arrived from the city.
    b.sent([
        ("One", "one", "NUM", 1, "nummod"),
        ("morning", "morning", "NOUN", 4, "obl:tmod"),
        ("a", "a", "DET", 3, "det"),
        ("letter", "letter", "NOUN", 4, "nsubj"),
        ("arrived", "arrive", "VERB", 4, "root"),
        ("from", "from", "ADP", 7, "case"),
        ("the", "the", "DET", 7, "det"),
        ("city", "city", "NOUN", 4, "obl"),
        (".", ".", "PUNCT", 4, "punct"),
    ], para=True)
    # S5: Anne read it twice.
    b.sent([
        ("Anne", "anne", "PROPN", 1, "nsubj"),
        ("read", "read", "VERB", 1, "root"),
        ("it", "it", "PRON", 1, "obj"),
        ("twice", "twice", "ADV", 1, "advmod"),
        (".", ".", "PUNCT", 1, "punct"),
    ])
    # S6: Captain James Rook was coming home.
    b.sent([
        ("Captain", "captain", "PROPN", 2, "compound"),
        ("James", "james", "PROPN", 2, "compound"),
        ("Rook", "rook", "PROPN", 4, "nsubj"),
        ("was", "be", "AUX", 4, "aux"),
        ("coming", "come", "VERB", 4, "root"),
        ("home", "home", "ADV", 4, "advmod"),
        (".", ".", "PUNCT", 4, "punct"),
    ])
    # S7: He had been away at sea for three years.
    b.sent([
        ("He", "he", "PRON", 3, "nsubj"),
        ("had", "have", "AUX", 3, "aux"),
        ("been", "be", "AUX", 3, "cop"),
        ("away", "away", "ADV", 3, "root"),
        ("at", "at", "ADP", 5, "case"),
        ("sea", "sea", "NOUN", 3, "obl"),
        ("for", "for", "ADP", 8, "case"),
        ("three", "three", "NUM", 8, "nummod"),
        ("years", "year", "NOUN", 3, "obl"),
        (".", ".", "PUNCT", 3, "punct"),
    ])
    # S8: Mrs. Penn brought the news to the lighthouse.
    b.sent([
        ("Mrs.", "mrs.", "PROPN", 1, "compound"),
        ("Penn", "penn", "PROPN", 2, "nsubj"),
        ("brought", "bring", "VERB", 2, "root"),
        ("the", "the", "DET", 4, "det"),
        ("news", "news", "NOUN", 2, "obj"),
        ("to", "to", "ADP", 7, "case"),
        ("the", "the", "DET", 7, "det"),
        ("lighthouse", "lighthouse", "NOUN", 2, "obl"),
        (".", ".", "PUNCT", 2, "punct"),
    ], para=True)
    # S9: She was a kind woman with sharp eyes.
    b.sent([
        ("She", "she", "PRON", 4, "nsubj"),
        ("was", "be", "AUX", 4, "cop"),
        ("a", "a", "DET", 4, "det"),
        ("kind", "kind", "ADJ", 4, "amod"),
        ("woman", "woman", "NOUN", 4, "root"),
        ("with", "with", "ADP", 7, "case"),
        ("sharp", "sharp", "ADJ", 7, "amod"),
        ("eyes", "eye", "NOUN", 4, "nmod"),
        (".", ".", "PUNCT", 4, "punct"),
    ])
    # S10: "He will hardly know the town," said Mrs. Penn.
    b.sent([
        (OPEN_Q, OPEN_Q, "PUNCT", 4, "punct"),
        ("He", "he", "PRON", 4, "nsubj"),
        ("will", "will", "AUX", 4, "aux"),
        ("hardly", "hardly", "ADV", 4, "advmod"),
        ("know", "know", "VERB", 9, "ccomp"),
        ("the", "the", "DET", 6, "det"),
        ("town", "town", "NOUN", 4, "obj"),
        (",", ",", "PUNCT", 4, "punct"),
        (CLOSE_Q, CLOSE_Q, "PUNCT", 4, "punct"),
        ("said", "say", "VERB", 9, "root"),
        ("Mrs.", "mrs.", "PROPN", 11, "compound"),
        ("Penn", "penn", "PROPN", 9, "nsubj"),
        (".", ".", "PUNCT", 9, "punct"),
    ])
    # S11: Anne only smiled.
    b.sent([
        ("Anne", "anne", "PROPN", 2, "nsubj"),
        ("only", "only", "ADV", 2, "advmod"),
        ("smiled", "smile", "VERB", 2, "root"),
        (".", ".", "PUNCT", 2, "punct"),
    ])
    # S12: "I remember his last visit," she said.
    b.sent([
        (OPEN_Q, OPEN_Q, "PUNCT", 2, "punct"),
        ("I", "i", "PRON", 2, "nsubj"),
        ("remember", "remember", "VERB", 9, "ccomp"),
        ("his", "his", "PRON", 5, "nmod:poss"),
        ("last", "last", "ADJ", 5, "amod"),
        ("visit", "visit", "NOUN", 2, "obj"),
        (",", ",", "PUNCT", 2, "punct"),
        (CLOSE_Q, CLOSE_Q, "PUNCT", 2, "punct"),
        ("she", "she", "PRON", 9, "nsubj"),
        ("said", "say", "VERB", 9, "root"),
        (".", ".", "PUNCT", 9, "punct"),
    ])
    # S13: "The harbor feels smaller every year," Anne added.
    b.sent([
        (OPEN_Q, OPEN_Q, "PUNCT", 3, "punct"),
        ("The", "the", "DET", 2, "det"),
        ("harbor", "harbor", "NOUN", 3, "nsubj"),
        ("feels", "feel", "VERB", 10, "ccomp"),
        ("smaller", "small", "ADJ", 3, "xcomp"),
        ("every", "every", "DET", 6, "det"),
        ("year", "year", "NOUN", 3, "obl:tmod"),
        (",", ",", "PUNCT", 3, "punct"),
        (CLOSE_Q, CLOSE_Q, "PUNCT", 3, "punct"),
        ("Anne", "anne", "PROPN", 10, "nsubj"),
        ("added", "add", "VERB", 10, "root"),
        (".", ".", "PUNCT", 10, "punct"),
    ], para=True)
    # S14: Her aunt waved from the white tower.
    b.sent([
        ("Her", "her", "PRON", 1, "nmod:poss"),
        ("aunt", "aunt", "NOUN", 2, "nsubj"),
        ("waved", "wave", "VERB", 2, "root"),
        ("from", "from", "ADP", 6, "case"),
        ("the", "the", "DET", 6, "det"),
        ("white", "white", "ADJ", 6, "amod"),
        ("tower", "tower", "NOUN", 2, "obl"),
        (".", ".", "PUNCT", 2, "punct"),
    ])
    # S15: "Write to him, dear," Mrs. Penn urged.
    b.sent([
        (OPEN_Q, OPEN_Q, "PUNCT", 1, "punct"),
        ("Write", "write", "VERB", 10, "ccomp"),
        ("to", "to", "ADP", 3, "case"),
        ("him", "he", "PRON", 1, "obl"),
        (",", ",", "PUNCT", 1, "punct"),
        ("dear", "dear", "NOUN", 1, "vocative"),
        (",", ",", "PUNCT", 1, "punct"),
        (CLOSE_Q, CLOSE_Q, "PUNCT", 1, "punct"),
        ("Mrs.", "mrs.", "PROPN", 9, "compound"),
        ("Penn", "penn", "PROPN", 10, "nsubj"),
        ("urged", "urge", "VERB", 10, "root"),
        (".", ".", "PUNCT", 10, "punct"),
    ])
    # S16: Anne felt brave that evening.
    b.sent([
        ("Anne", "anne", "PROPN", 1, "nsubj"),
        ("felt", "feel", "VERB", 1, "root"),
        ("brave", "brave", "ADJ", 1, "xcomp"),
        ("that", "that", "DET", 4, "det"),
        ("evening", "evening", "NOUN", 1, "obl:tmod"),
        (".", ".", "PUNCT", 1, "punct"),
    ])
    # S17: She was happy.
    b.sent([
        ("She", "she", "PRON", 2, "nsubj"),
        ("was", "be", "AUX", 2, "cop"),
        ("happy", "happy", "ADJ", 2, "root"),
        (".", ".", "PUNCT", 2, "punct"),
    ])
    # S18: But the sea was restless.
    b.sent([
        ("But", "but", "CCONJ", 4, "cc"),
        ("the", "the", "DET", 2, "det"),
        ("sea", "sea", "NOUN", 4, "nsubj"),
        ("was", "be", "AUX", 4, "cop"),
        ("restless", "restless", "ADJ", 4, "root"),
        (".", ".", "PUNCT", 4, "punct"),
    ])
    # S19: Storms came early that autumn.
    b.sent([
        ("Storms", "storm", "NOUN", 1, "nsubj"),
        ("came", "come", "VERB", 1, "root"),
        ("early", "early", "ADV", 1, "advmod"),
        ("that", "that", "DET", 4, "det"),
        ("autumn", "autumn", "NOUN", 1, "obl:tmod"),
        (".", ".", "PUNCT", 1, "punct"),
    ])

    # --------------------------------------------------------------- ch. II
    b.heading("II", "The Storm")
    # S20: The storm reached Harborside on a Tuesday.
    b.sent([
        ("The", "the", "DET", 1, "det"),
        ("storm", "storm", "NOUN", 2, "nsubj"),
        ("reached", "reach", "VERB", 2, "root"),
        ("Harborside", "harborside", "PROPN", 2, "obj"),
        ("on", "on", "ADP", 6, "case"),
        ("a", "a", "DET", 6, "det"),
        ("Tuesday", "tuesday", "PROPN", 2, "obl"),
        (".", ".", "PUNCT", 2, "punct"),
    ])
    # S21: Waves broke over the old pier.
    b.sent([
        ("Waves", "wave", "NOUN", 1, "nsubj"),
        ("broke", "break", "VERB", 1, "root"),
        ("over", "over", "ADP", 5, "case"),
        ("the", "the", "DET", 5, "det"),
        ("old", "old", "ADJ", 5, "amod"),
        ("pier", "pier", "NOUN", 1, "obl"),
        (".", ".", "PUNCT", 1, "punct"),
    ])
    # S22: Anne climbed the tower and lit the lamp.
    b.sent([
        ("Anne", "anne", "PROPN", 1, "nsubj"),
        ("climbed", "climb", "VERB", 1, "root"),
        ("the", "the", "DET", 3, "det"),
        ("tower", "tower", "NOUN", 1, "obj"),
        ("and", "and", "CCONJ", 5, "cc"),
        ("lit", "light", "VERB", 1, "conj"),
        ("the", "the", "DET", 7, "det"),
        ("lamp", "lamp", "NOUN", 5, "obj"),
        (".", ".", "PUNCT", 1, "punct"),
    ])
    # S23: The lighthouse stood firm against the wind.
    b.sent([
        ("The", "the", "DET", 1, "det"),
        ("lighthouse", "lighthouse", "NOUN", 2, "nsubj"),
        ("stood", "stand", "VERB", 2, "root"),
        ("firm", "firm", "ADJ", 2, "xcomp"),
        ("against", "against", "ADP", 6, "case"),
        ("the", "the", "DET", 6, "det"),
        ("wind", "wind", "NOUN", 2, "obl"),
        (".", ".", "PUNCT", 2, "punct"),
    ])
    # S24: She feared for the fishing boats.
    b.sent([
        ("She", "she", "PRON", 1, "nsubj"),
        ("feared", "fear", "VERB", 1, "root"),
        ("for", "for", "ADP", 5, "case"),
        ("the", "the", "DET", 5, "det"),
        ("fishing", "fishing", "NOUN", 5, "compound"),
        ("boats", "boat", "NOUN", 1, "obl"),
        (".", ".", "PUNCT", 1, "punct"),
    ])
    # S25: A small sloop struggled near the rocks.
    b.sent([
        ("A", "a", "DET", 2, "det"),
        ("small", "small", "ADJ", 2, "amod"),
        ("sloop", "sloop", "NOUN", 3, "nsubj"),
        ("struggled", "struggle", "VERB", 3, "root"),
        ("near", "near", "ADP", 6, "case"),
        ("the", "the", "DET", 6, "det"),
        ("rocks", "rock", "NOUN", 3, "obl"),
        (".", ".", "PUNCT", 3, "punct"),
    ], para=True)
    # S26: Captain Rook stood at its helm.
    b.sent([
        ("Captain", "captain", "PROPN", 1, "compound"),
        ("Rook", "rook", "PROPN", 2, "nsubj"),
        ("stood", "stand", "VERB", 2, "root"),
        ("at", "at", "ADP", 5, "case"),
        ("its", "its", "PRON", 5, "nmod:poss"),
        ("helm", "helm", "NOUN", 2, "obl"),
        (".", ".", "PUNCT", 2, "punct"),
    ])
    # S27: He shouted orders through the rain.
    b.sent([
        ("He", "he", "PRON", 1, "nsubj"),
        ("shouted", "shout", "VERB", 1, "root"),
        ("orders", "order", "NOUN", 1, "obj"),
        ("through", "through", "ADP", 5, "case"),
        ("the", "the", "DET", 5, "det"),
        ("rain", "rain", "NOUN", 1, "obl"),
        (".", ".", "PUNCT", 1, "punct"),
    ])
    # S28: "Hold the line!" he cried.
    b.sent([
        (OPEN_Q, OPEN_Q, "PUNCT", 1, "punct"),
        ("Hold", "hold", "VERB", 7, "ccomp"),
        ("the", "the", "DET", 3, "det"),
        ("line", "line", "NOUN", 1, "obj"),
        ("!", "!", "PUNCT", 1, "punct"),
        (CLOSE_Q, CLOSE_Q, "PUNCT", 1, "punct"),
        ("he", "he", "PRON", 7, "nsubj"),
        ("cried", "cry", "VERB", 7, "root"),
        (".", ".", "PUNCT", 7, "punct"),
    ])
    # S29: The sailors trusted him completely.
    b.sent([
        ("The", "the", "DET", 1, "det"),
        ("sailors", "sailor", "NOUN", 2, "nsubj"),
        ("trusted", "trust", "VERB", 2, "root"),
        ("him", "he", "PRON", 2, "obj"),
        ("completely", "completely", "ADV", 2, "advmod"),
        (".", ".", "PUNCT", 2, "punct"),
    ])
    # S30: Anne watched the sloop from the gallery.
    b.sent([
        ("Anne", "anne", "PROPN", 1, "nsubj"),
        ("watched", "watch", "VERB", 1, "root"),
        ("the", "the", "DET", 3, "det"),
        ("sloop", "sloop", "NOUN", 1, "obj"),
        ("from", "from", "ADP", 6, "case"),
        ("the", "the", "DET", 6, "det"),
        ("gallery", "gallery", "NOUN", 1, "obl"),
        (".", ".", "PUNCT", 1, "punct"),
    ], para=True)
    # S31: Her heart pounded in her chest.
    b.sent([
        ("Her", "her", "PRON", 1, "nmod:poss"),
        ("heart", "heart", "NOUN", 2, "nsubj"),
        ("pounded", "pound", "VERB", 2, "root"),
        ("in", "in", "ADP", 5, "case"),
        ("her", "her", "PRON", 5, "nmod:poss"),
        ("chest", "chest", "NOUN", 2, "obl"),
        (".", ".", "PUNCT", 2, "punct"),
    ])
    # S32: "He is reckless," she whispered.
    b.sent([
        (OPEN_Q, OPEN_Q, "PUNCT", 3, "punct"),
        ("He", "he", "PRON", 3, "nsubj"),
        ("is", "be", "AUX", 3, "cop"),
        ("reckless", "reckless", "ADJ", 7, "ccomp"),
        (",", ",", "PUNCT", 3, "punct"),
        (CLOSE_Q, CLOSE_Q, "PUNCT", 3, "punct"),
        ("she", "she", "PRON", 7, "nsubj"),
        ("whispered", "whisper", "VERB", 7, "root"),
        (".", ".", "PUNCT", 7, "punct"),
    ])
    # S33: "But he is also very skilled," she admitted.
    b.sent([
        (OPEN_Q, OPEN_Q, "PUNCT", 6, "punct"),
        ("But", "but", "CCONJ", 6, "cc"),
        ("he", "he", "PRON", 6, "nsubj"),
        ("is", "be", "AUX", 6, "cop"),
        ("also", "also", "ADV", 6, "advmod"),
        ("very", "very", "ADV", 6, "advmod"),
        ("skilled", "skilled", "ADJ", 10, "ccomp"),
        (",", ",", "PUNCT", 6, "punct"),
        (CLOSE_Q, CLOSE_Q, "PUNCT", 6, "punct"),
        ("she", "she", "PRON", 10, "nsubj"),
        ("admitted", "admit", "VERB", 10, "root"),
        (".", ".", "PUNCT", 10, "punct"),
    ])
    # S34: She was fearless in the storm.
    b.sent([
        ("She", "she", "PRON", 2, "nsubj"),
        ("was", "be", "AUX", 2, "cop"),
        ("fearless", "fearless", "ADJ", 2, "root"),
        ("in", "in", "ADP", 5, "case"),
        ("the", "the", "DET", 5, "det"),
        ("storm", "storm", "NOUN", 2, "obl"),
        (".", ".", "PUNCT", 2, "punct"),
    ])
    # S35: Rook guided her into the calm harbor.
    b.sent([
        ("Rook", "rook", "PROPN", 1, "nsubj"),
        ("guided", "guide", "VERB", 1, "root"),
        ("her", "she", "PRON", 1, "obj"),
        ("into", "into", "ADP", 6, "case"),
        ("the", "the", "DET", 6, "det"),
        ("calm", "calm", "ADJ", 6, "amod"),
        ("harbor", "harbor", "NOUN", 1, "obl"),
        (".", ".", "PUNCT", 1, "punct"),
    ], para=True)
    # S36: Anne ran down to the quay.
    b.sent([
        ("Anne", "anne", "PROPN", 1, "nsubj"),
        ("ran", "run", "VERB", 1, "root"),
        ("down", "down", "ADV", 1, "advmod"),
        ("to", "to", "ADP", 5, "case"),
        ("the", "the", "DET", 5, "det"),
        ("quay", "quay", "NOUN", 1, "obl"),
        (".", ".", "PUNCT", 1, "punct"),
    ])
    # S37: The rain soaked her coat and her hair.
    b.sent([
        ("The", "the", "DET", 1, "det"),
        ("rain", "rain", "NOUN", 2, "nsubj"),
        ("soaked", "soak", "VERB", 2, "root"),
        ("her", "her", "PRON", 4, "nmod:poss"),
        ("coat", "coat", "NOUN", 2, "obj"),
        ("and", "and", "CCONJ", 7, "cc"),
        ("her", "her", "PRON", 7, "nmod:poss"),
        ("hair", "hair", "NOUN", 4, "conj"),
        (".", ".", "PUNCT", 2, "punct"),
    ])
    # S38: "You kept the light burning," Rook told her.
    b.sent([
        (OPEN_Q, OPEN_Q, "PUNCT", 2, "punct"),
        ("You", "you", "PRON", 2, "nsubj"),
        ("kept", "keep", "VERB", 9, "ccomp"),
        ("the", "the", "DET", 4, "det"),
        ("light", "light", "NOUN", 2, "obj"),
        ("burning", "burn", "VERB", 2, "xcomp"),
        (",", ",", "PUNCT", 2, "punct"),
        (CLOSE_Q, CLOSE_Q, "PUNCT", 2, "punct"),
        ("Rook", "rook", "PROPN", 9, "nsubj"),
        ("told", "tell", "VERB", 9, "root"),
        ("her", "she", "PRON", 9, "obj"),
        (".", ".", "PUNCT", 9, "punct"),
    ])
    # S39: She laughed with relief.
    b.sent([
        ("She", "she", "PRON", 1, "nsubj"),
        ("laughed", "laugh", "VERB", 1, "root"),
        ("with", "with", "ADP", 3, "case"),
        ("relief", "relief", "NOUN", 1, "obl"),
        (".", ".", "PUNCT", 1, "punct"),
    ])

    # -------------------------------------------------------------- ch. III
    b.heading("III", "The Lantern")
    # S40: Winter passed and the harbor thawed.
    b.sent([
        ("Winter", "winter", "NOUN", 1, "nsubj"),
        ("passed", "pass", "VERB", 1, "root"),
        ("and", "and", "CCONJ", 5, "cc"),
        ("the", "the", "DET", 4, "det"),
        ("harbor", "harbor", "NOUN", 5, "nsubj"),
        ("thawed", "thaw", "VERB", 1, "conj"),
        (".", ".", "PUNCT", 1, "punct"),
    ])
    # S41: Captain Rook called at the lighthouse every week.
    b.sent([
        ("Captain", "captain", "PROPN", 1, "compound"),
        ("Rook", "rook", "PROPN", 2, "nsubj"),
        ("called", "call", "VERB", 2, "root"),
        ("at", "at", "ADP", 5, "case"),
        ("the", "the", "DET", 5, "det"),
        ("lighthouse", "lighthouse", "NOUN", 2, "obl"),
        ("every", "every", "DET", 7, "det"),
        ("week", "week", "NOUN", 2, "obl:tmod"),
        (".", ".", "PUNCT", 2, "punct"),
    ])
    # S42: He brought charts and strange stories.
    b.sent([
        ("He", "he", "PRON", 1, "nsubj"),
        ("brought", "bring", "VERB", 1, "root"),
        ("charts", "chart", "NOUN", 1, "obj"),
        ("and", "and", "CCONJ", 5, "cc"),
        ("strange", "strange", "ADJ", 5, "amod"),
        ("stories", "story", "NOUN", 2, "conj"),
        (".", ".", "PUNCT", 1, "punct"),
    ])
    # S43: Mrs. Penn teased them without mercy.
    b.sent([
        ("Mrs.", "mrs.", "PROPN", 1, "compound"),
        ("Penn", "penn", "PROPN", 2, "nsubj"),
        ("teased", "tease", "VERB", 2, "root"),
        ("them", "they", "PRON", 2, "obj"),
        ("without", "without", "ADP", 5, "case"),
        ("mercy", "mercy", "NOUN", 2, "obl"),
        (".", ".", "PUNCT", 2, "punct"),
    ])
    # S44: "You two quarrel like gulls," she declared.
    b.sent([
        (OPEN_Q, OPEN_Q, "PUNCT", 3, "punct"),
        ("You", "you", "PRON", 3, "nsubj"),
        ("two", "two", "NUM", 1, "nummod"),
        ("quarrel", "quarrel", "VERB", 9, "ccomp"),
        ("like", "like", "ADP", 5, "case"),
        ("gulls", "gull", "NOUN", 3, "obl"),
        (",", ",", "PUNCT", 3, "punct"),
        (CLOSE_Q, CLOSE_Q, "PUNCT", 3, "punct"),
        ("she", "she", "PRON", 9, "nsubj"),
        ("declared", "declare", "VERB", 9, "root"),
        (".", ".", "PUNCT", 9, "punct"),
    ])
    # S45: One evening Anne unfolded an old chart.
    b.sent([
        ("One", "one", "NUM", 1, "nummod"),
        ("evening", "evening", "NOUN", 3, "obl:tmod"),
        ("Anne", "anne", "PROPN", 3, "nsubj"),
        ("unfolded", "unfold", "VERB", 3, "root"),
        ("an", "a", "DET", 6, "det"),
        ("old", "old", "ADJ", 6, "amod"),
        ("chart", "chart", "NOUN", 3, "obj"),
        (".", ".", "PUNCT", 3, "punct"),
    ], para=True)
    # S46: It showed the reef beyond the point.
    b.sent([
        ("It", "it", "PRON", 1, "nsubj"),
        ("showed", "show", "VERB", 1, "root"),
        ("the", "the", "DET", 3, "det"),
        ("reef", "reef", "NOUN", 1, "obj"),
        ("beyond", "beyond", "ADP", 6, "case"),
        ("the", "the", "DET", 6, "det"),
        ("point", "point", "NOUN", 3, "nmod"),
        (".", ".", "PUNCT", 1, "punct"),
    ])
    # S47: "My father drew this," she said proudly.
    b.sent([
        (OPEN_Q, OPEN_Q, "PUNCT", 3, "punct"),
        ("My", "my", "PRON", 2, "nmod:poss"),
        ("father", "father", "NOUN", 3, "nsubj"),
        ("drew", "draw", "VERB", 8, "ccomp"),
        ("this", "this", "PRON", 3, "obj"),
        (",", ",", "PUNCT", 3, "punct"),
        (CLOSE_Q, CLOSE_Q, "PUNCT", 3, "punct"),
        ("she", "she", "PRON", 8, "nsubj"),
        ("said", "say", "VERB", 8, "root"),
        ("proudly", "proudly", "ADV", 8, "advmod"),
        (".", ".", "PUNCT", 8, "punct"),
    ])
    # S48: Rook studied it for a long time.
    b.sent([
        ("Rook", "rook", "PROPN", 1, "nsubj"),
        ("studied", "study", "VERB", 1, "root"),
        ("it", "it", "PRON", 1, "obj"),
        ("for", "for", "ADP", 6, "case"),
        ("a", "a", "DET", 6, "det"),
        ("long", "long", "ADJ", 6, "amod"),
        ("time", "time", "NOUN", 1, "obl"),
        (".", ".", "PUNCT", 1, "punct"),
    ])
    # S49: "Your father was a careful man," he said at last.
    b.sent([
        (OPEN_Q, OPEN_Q, "PUNCT", 6, "punct"),
        ("Your", "your", "PRON", 2, "nmod:poss"),
        ("father", "father", "NOUN", 6, "nsubj"),
        ("was", "be", "AUX", 6, "cop"),
        ("a", "a", "DET", 6, "det"),
        ("careful", "careful", "ADJ", 6, "amod"),
        ("man", "man", "NOUN", 10, "ccomp"),
        (",", ",", "PUNCT", 6, "punct"),
        (CLOSE_Q, CLOSE_Q, "PUNCT", 6, "punct"),
        ("he", "he", "PRON", 10, "nsubj"),
        ("said", "say", "VERB", 10, "root"),
        ("at", "at", "ADP", 12, "case"),
        ("last", "last", "NOUN", 10, "obl"),
        (".", ".", "PUNCT", 10, "punct"),
    ])
    # S50: Anne hung the chart beside the lantern.
    b.sent([
        ("Anne", "anne", "PROPN", 1, "nsubj"),
        ("hung", "hang", "VERB", 1, "root"),
        ("the", "the", "DET", 3, "det"),
        ("chart", "chart", "NOUN", 1, "obj"),
        ("beside", "beside", "ADP", 6, "case"),
        ("the", "the", "DET", 6, "det"),
        ("lantern", "lantern", "NOUN", 1, "obl"),
        (".", ".", "PUNCT", 1, "punct"),
    ])
    # S51: She felt proud of the little kingdom.
    b.sent([
        ("She", "she", "PRON", 1, "nsubj"),
        ("felt", "feel", "VERB", 1, "root"),
        ("proud", "proud", "ADJ", 1, "xcomp"),
        ("of", "of", "ADP", 6, "case"),
        ("the", "the", "DET", 6, "det"),
        ("little", "little", "ADJ", 6, "amod"),
        ("kingdom", "kingdom", "NOUN", 2, "obl"),
        (".", ".", "PUNCT", 1, "punct"),
    ])
    # S52: The lighthouse gleamed all spring.
    b.sent([
        ("The", "the", "DET", 1, "det"),
        ("lighthouse", "lighthouse", "NOUN", 2, "nsubj"),
        ("gleamed", "gleam", "VERB", 2, "root"),
        ("all", "all", "DET", 4, "det"),
        ("spring", "spring", "NOUN", 2, "obl:tmod"),
        (".", ".", "PUNCT", 2, "punct"),
    ])
    # S53: One morning Rook arrived with a small parcel.
    b.sent([
        ("One", "one", "NUM", 1, "nummod"),
        ("morning", "morning", "NOUN", 3, "obl:tmod"),
        ("Rook", "rook", "PROPN", 3, "nsubj"),
        ("arrived", "arrive", "VERB", 3, "root"),
        ("with", "with", "ADP", 7, "case"),
        ("a", "a", "DET", 7, "det"),
        ("small", "small", "ADJ", 7, "amod"),
        ("parcel", "parcel", "NOUN", 3, "obl"),
        (".", ".", "PUNCT", 3, "punct"),
    ], para=True)
    # S54: His hands trembled slightly.
    b.sent([
        ("His", "his", "PRON", 1, "nmod:poss"),
        ("hands", "hand", "NOUN", 2, "nsubj"),
        ("trembled", "tremble", "VERB", 2, "root"),
        ("slightly", "slightly", "ADV", 2, "advmod"),
        (".", ".", "PUNCT", 2, "punct"),
    ])
    # S55: "I have a question for you," he began.
    b.sent([
        (OPEN_Q, OPEN_Q, "PUNCT", 2, "punct"),
        ("I", "i", "PRON", 2, "nsubj"),
        ("have", "have", "VERB", 10, "ccomp"),
        ("a", "a", "DET", 4, "det"),
        ("question", "question", "NOUN", 2, "obj"),
        ("for", "for", "ADP", 6, "case"),
        ("you", "you", "PRON", 4, "nmod"),
        (",", ",", "PUNCT", 2, "punct"),
        (CLOSE_Q, CLOSE_Q, "PUNCT", 2, "punct"),
        ("he", "he", "PRON", 10, "nsubj"),
        ("began", "begin", "VERB", 10, "root"),
        (".", ".", "PUNCT", 10, "punct"),
    ])
    # S56: Anne answered before he finished.
    b.sent([
        ("Anne", "anne", "PROPN", 1, "nsubj"),
        ("answered", "answer", "VERB", 1, "root"),
        ("before", "before", "SCONJ", 4, "mark"),
        ("he", "he", "PRON", 4, "nsubj"),
        ("finished", "finish", "VERB", 1, "advcl"),
        (".", ".", "PUNCT", 1, "punct"),
    ])
    # S57: "Yes," she said simply.
    b.sent([
        (OPEN_Q, OPEN_Q, "PUNCT", 1, "punct"),
        ("Yes", "yes", "INTJ", 5, "discourse"),
        (",", ",", "PUNCT", 1, "punct"),
        (CLOSE_Q, CLOSE_Q, "PUNCT", 1, "punct"),
        ("she", "she", "PRON", 5, "nsubj"),
        ("said", "say", "VERB", 5, "root"),
        ("simply", "simply", "ADV", 5, "advmod"),
        (".", ".", "PUNCT", 5, "punct"),
    ])
    # S58: Mrs. Penn wept happy tears at the wedding.
    b.sent([
        ("Mrs.", "mrs.", "PROPN", 1, "compound"),
        ("Penn", "penn", "PROPN", 2, "nsubj"),
        ("wept", "weep", "VERB", 2, "root"),
        ("happy", "happy", "ADJ", 4, "amod"),
        ("tears", "tear", "NOUN", 2, "obj"),
        ("at", "at", "ADP", 7, "case"),
        ("the", "the", "DET", 7, "det"),
        ("wedding", "wedding", "NOUN", 2, "obl"),
        (".", ".", "PUNCT", 2, "punct"),
    ])
    # S59: The lantern burned bright over the calm sea.
    b.sent([
        ("The", "the", "DET", 1, "det"),
        ("lantern", "lantern", "NOUN", 2, "nsubj"),
        ("burned", "burn", "VERB", 2, "root"),
        ("bright", "bright", "ADJ", 2, "xcomp"),
        ("over", "over", "ADP", 7, "case"),
        ("the", "the", "DET", 7, "det"),
        ("calm", "calm", "ADJ", 7, "amod"),
        ("sea", "sea", "NOUN", 2, "obl"),
        (".", ".", "PUNCT", 2, "punct"),
    ])

    # ------------------------------------------------------------- clusters
    # (cluster id, hint, source chapter, [(sentence, lo, hi, surface)])
    cluster_spec = [
        ("c0-anne", "Anne Marlow", 0, [
            (0, 0, 2, "Anne Marlow"), (2, 0, 1, "She"), (2, 6, 7, "her"), (3, 3, 4, "her"),
            (5, 0, 1, "Anne"), (11, 0, 1, "Anne"), (12, 1, 2, "I"), (12, 8, 9, "she"),
            (13, 9, 10, "Anne"), (14, 0, 1, "Her"), (16, 0, 1, "Anne"), (17, 0, 1, "She"),
        ]),
        ("c0-rook", "Captain James Rook", 0, [
            (6, 0, 3, "Captain James Rook"), (7, 0, 1, "He"), (10, 1, 2, "He"),
            (12, 3, 4, "his"), (15, 3, 4, "him"),
        ]),
        ("c0-penn", "Mrs. Penn", 0, [
            (8, 0, 2, "Mrs. Penn"), (9, 0, 1, "She"), (10, 10, 12, "Mrs. Penn"), (15, 8, 10, "Mrs. Penn"),
        ]),
        ("c0-town", "Harborside", 0, [
            (0, 4, 5, "Harborside"), (1, 0, 2, "The town"), (10, 5, 7, "the town"), (13, 1, 3, "The harbor"),
        ]),
        ("c0-light", "the old lighthouse", 0, [
            (2, 2, 5, "the old lighthouse"), (8, 6, 8, "the lighthouse"),
        ]),
        ("c1-anne", "Anne", 1, [
            (22, 0, 1, "Anne"), (24, 0, 1, "She"), (30, 0, 1, "Anne"), (31, 0, 1, "Her"),
            (31, 4, 5, "her"), (32, 6, 7, "she"), (33, 9, 10, "she"), (34, 0, 1, "She"),
            (36, 0, 1, "Anne"), (37, 3, 4, "her"), (37, 6, 7, "her"), (38, 1, 2, "You"),
            (38, 10, 11, "her"), (39, 0, 1, "She"),
        ]),
        ("c1-rook", "Captain Rook", 1, [
            (26, 0, 2, "Captain Rook"), (27, 0, 1, "He"), (28, 6, 7, "he"), (29, 3, 4, "him"),
            (32, 1, 2, "He"), (33, 2, 3, "he"), (35, 0, 1, "Rook"), (38, 8, 9, "Rook"),
        ]),
        ("c1-town", "Harborside", 1, [
            (20, 3, 4, "Harborside"), (35, 4, 7, "the calm harbor"),
        ]),
        ("c1-light", "The lighthouse", 1, [
            (23, 0, 2, "The lighthouse"),
        ]),
        ("c2-anne", "Anne", 2, [
            (45, 2, 3, "Anne"), (47, 1, 2, "My"), (47, 7, 8, "she"), (50, 0, 1, "Anne"),
            (51, 0, 1, "She"), (55, 6, 7, "you"), (56, 0, 1, "Anne"), (57, 4, 5, "she"),
        ]),
        ("c2-rook", "Captain Rook", 2, [
            (41, 0, 2, "Captain Rook"), (42, 0, 1, "He"), (48, 0, 1, "Rook"), (49, 9, 10, "he"),
            (53, 2, 3, "Rook"), (54, 0, 1, "His"), (55, 1, 2, "I"), (55, 9, 10, "he"),
            (56, 3, 4, "he"),
        ]),
        ("c2-penn", "Mrs. Penn", 2, [
            (43, 0, 2, "Mrs. Penn"), (44, 8, 9, "she"), (58, 0, 2, "Mrs. Penn"),
        ]),
        ("c2-town", "the harbor", 2, [
            (40, 3, 5, "the harbor"),
        ]),
        ("c2-light", "the lighthouse", 2, [
            (41, 4, 6, "the lighthouse"), (52, 0, 2, "The lighthouse"),
        ]),
    ]
    clusters = []
    for cid, hint, chapter, refs in cluster_spec:
        mentions = sorted(b.span_of(s, lo, hi, surface) for s, lo, hi, surface in refs)
        clusters.append(
            {"id": cid, "mentions": [list(m) for m in mentions], "source_chapter": chapter, "hint": hint}
        )

    # --------------------------------------------------------- propositions
    # (sentence, [(role, lo, hi, surface)])
    prop_spec = [
        (0, [("ARG0", 0, 2, "Anne Marlow"), ("V", 2, 3, "lived")]),
        (5, [("ARG0", 0, 1, "Anne"), ("V", 1, 2, "read"), ("ARG1", 2, 3, "it")]),
        (6, [("ARG0", 0, 3, "Captain James Rook"), ("V", 4, 5, "coming")]),
        (8, [("ARG0", 0, 2, "Mrs. Penn"), ("V", 2, 3, "brought"), ("ARG1", 3, 5, "the news")]),
        (10, [("ARG0", 1, 2, "He"), ("V", 4, 5, "know"), ("ARG1", 5, 7, "the town")]),
        (10, [("ARG0", 10, 12, "Mrs. Penn"), ("V", 9, 10, "said")]),
        (12, [("ARG0", 1, 2, "I"), ("V", 2, 3, "remember"), ("ARG1", 3, 6, "his last visit")]),
        (12, [("ARG0", 8, 9, "she"), ("V", 9, 10, "said")]),
        (15, [("V", 1, 2, "Write"), ("ARG1", 2, 4, "to him")]),
        (15, [("ARG0", 8, 10, "Mrs. Penn"), ("V", 10, 11, "urged")]),
        (22, [("ARG0", 0, 1, "Anne"), ("V", 1, 2, "climbed"), ("ARG1", 2, 4, "the tower")]),
        (22, [("ARG0", 0, 1, "Anne"), ("V", 5, 6, "lit"), ("ARG1", 6, 8, "the lamp")]),
        (24, [("ARG0", 0, 1, "She"), ("V", 1, 2, "feared")]),
        (26, [("ARG0", 0, 2, "Captain Rook"), ("V", 2, 3, "stood")]),
        (27, [("ARG0", 0, 1, "He"), ("V", 1, 2, "shouted"), ("ARG1", 2, 3, "orders")]),
        (30, [("ARG0", 0, 1, "Anne"), ("V", 1, 2, "watched"), ("ARG1", 2, 4, "the sloop")]),
        (35, [("ARG0", 0, 1, "Rook"), ("V", 1, 2, "guided"), ("ARG1", 2, 3, "her")]),
        (36, [("ARG0", 0, 1, "Anne"), ("V", 1, 2, "ran")]),
        (38, [("ARG0", 1, 2, "You"), ("V", 2, 3, "kept"), ("ARG1", 3, 5, "the light")]),
        (38, [("ARG0", 8, 9, "Rook"), ("V", 9, 10, "told"), ("ARG2", 10, 11, "her")]),
        (41, [("ARG0", 0, 2, "Captain Rook"), ("V", 2, 3, "called")]),
        (42, [("ARG0", 0, 1, "He"), ("V", 1, 2, "brought"), ("ARG1", 2, 3, "charts")]),
        (43, [("ARG0", 0, 2, "Mrs. Penn"), ("V", 2, 3, "teased"), ("ARG1", 3, 4, "them")]),
        (45, [("ARG0", 2, 3, "Anne"), ("V", 3, 4, "unfolded"), ("ARG1", 4, 7, "an old chart")]),
        (47, [("ARG0", 1, 3, "My father"), ("V", 3, 4, "drew"), ("ARG1", 4, 5, "this")]),
        (47, [("ARG0", 7, 8, "she"), ("V", 8, 9, "said")]),
        (48, [("ARG0", 0, 1, "Rook"), ("V", 1, 2, "studied"), ("ARG1", 2, 3, "it")]),
        (50, [("ARG0", 0, 1, "Anne"), ("V", 1, 2, "hung"), ("ARG1", 2, 4, "the chart")]),
        (53, [("ARG0", 2, 3, "Rook"), ("V", 3, 4, "arrived")]),
        (55, [("ARG0", 1, 2, "I"), ("V", 2, 3, "have"), ("ARG1", 3, 5, "a question")]),
        (56, [("ARG0", 0, 1, "Anne"), ("V", 1, 2, "answered")]),
        (56, [("ARG0", 3, 4, "he"), ("V", 4, 5, "finished")]),
        (58, [("ARG0", 0, 2, "Mrs. Penn"), ("V", 2, 3, "wept"), ("ARG1", 3, 5, "happy tears")]),
    ]
    propositions = []
    for sentence, args in prop_spec:
        arg_rows = []
        for role, lo, hi, surface in args:
            start, end = b.span_of(sentence, lo, hi, surface)
            arg_rows.append({"role": role, "start": start, "end": end})
        propositions.append({"sentence": sentence, "args": arg_rows})

    scores = [
        {"sentence": 17, "sentiment": 0.84},
        {"sentence": 28, "emotion": "fear"},
    ]

    payload = canonical_bytes(
        {
            "format_version": 1,
            "tokens": b.tokens,
            "sentences": b.sentences,
            "clusters": clusters,
            "propositions": propositions,
            "scores": scores,
        }
    )

    # ------------------------------------------------------------ gold data
    # (sentence, local open-mark index, local close-mark index, speaker)
    quote_spec = [
        (10, 0, 8, "Mrs. Penn"),
        (12, 0, 7, "Anne Marlow"),
        (13, 0, 8, "Anne Marlow"),
        (15, 0, 7, "Mrs. Penn"),
        (28, 0, 5, "Captain Rook"),
        (32, 0, 5, "Anne Marlow"),
        (33, 0, 8, "Anne Marlow"),
        (38, 0, 7, "Captain Rook"),
        (44, 0, 7, "Mrs. Penn"),
        (47, 0, 6, "Anne Marlow"),
        (49, 0, 8, "Captain Rook"),
        (55, 0, 8, "Captain Rook"),
        (57, 0, 3, "Anne Marlow"),
    ]
    gold_quotes = []
    for sentence, open_idx, close_idx, speaker in quote_spec:
        start = b.token_spans[sentence][open_idx][1]
        end = b.token_spans[sentence][close_idx][0]
        gold_quotes.append({"span": [start, end], "sentence": sentence, "speaker": speaker})

    A, R, P = "Anne Marlow", "Captain Rook", "Mrs. Penn"
    gold_actions = {
        (A, "live", 0), (A, "keep", 2), (A, "read", 5), (R, "come", 6), (P, "bring", 8),
        (P, "say", 10), (R, "know", 10), (A, "smile", 11), (A, "remember", 12), (A, "say", 12),
        (A, "add", 13), (P, "urge", 15), (A, "feel", 16),
        (A, "climb", 22), (A, "light", 22), (A, "fear", 24), (R, "stand", 26), (R, "shout", 27),
        (R, "cry", 28), (A, "watch", 30), (A, "whisper", 32), (A, "admit", 33), (R, "guide", 35),
        (A, "run", 36), (R, "tell", 38), (A, "keep", 38), (A, "laugh", 39),
        (R, "call", 41), (R, "bring", 42), (P, "tease", 43), (P, "declare", 44), (A, "unfold", 45),
        (A, "say", 47), (R, "study", 48), (R, "say", 49), (A, "hang", 50), (A, "feel", 51),
        (R, "arrive", 53), (R, "have", 55), (R, "begin", 55), (A, "answer", 56), (R, "finish", 56),
        (A, "say", 57), (P, "weep", 58),
    }
    gold_definitions = {
        (P, "kind", 9), (A, "brave", 16), (A, "happy", 17),
        (R, "reckless", 32), (R, "skilled", 33), (A, "fearless", 34),
        (A, "proud", 51),
    }
    gold_presence = {
        A: {0: 12, 1: 14, 2: 8},
        R: {0: 5, 1: 8, 2: 9},
        P: {0: 4, 1: 0, 2: 3},
    }
    gold_context_presence = {
        "Harborside": {0: 4, 1: 2, 2: 1},
        "the lighthouse": {0: 2, 1: 1, 2: 2},
    }

    return SampleStory(
        text=b.text(),
        payload=payload,
        gold_quotes=gold_quotes,
        gold_actions=gold_actions,
        gold_definitions=gold_definitions,
        gold_presence=gold_presence,
        gold_context_presence=gold_context_presence,
        sentence_chapters=[s["chapter"] for s in b.sentences],
    )


#: The canonical review script: merges chapter-scoped clusters per entity,
#: names the three characters, and tags the recurring places as context.
CURATION = [
    ("label", "c0-anne", "character"), ("name", "c0-anne", "Anne Marlow"),
    ("merge", "c1-anne", "c0-anne"), ("merge", "c2-anne", "c0-anne"),
    ("label", "c0-rook", "character"), ("name", "c0-rook", "Captain Rook"),
    ("merge", "c1-rook", "c0-rook"), ("merge", "c2-rook", "c0-rook"),
    ("label", "c0-penn", "character"), ("name", "c0-penn", "Mrs. Penn"),
    ("merge", "c2-penn", "c0-penn"),
    ("label", "c0-town", "context"), ("name", "c0-town", "Harborside"),
    ("merge", "c1-town", "c0-town"), ("merge", "c2-town", "c0-town"),
    ("label", "c0-light", "context"), ("name", "c0-light", "the lighthouse"),
    ("merge", "c1-light", "c0-light"), ("merge", "c2-light", "c0-light"),
]


def curate(registry: CharacterRegistry) -> None:
    """Apply the canonical review script to a fresh sample registry."""
    for op, *args in CURATION:
        if op == "label":
            registry.set_label(args[0], args[1])
        elif op == "name":
            registry.set_name(args[0], args[1])
        else:
            registry.merge_clusters(args[0], args[1])
