"""Self-contained heuristic pipeline.

No model downloads, fully deterministic: a regex tokenizer, an
abbreviation-aware sentence splitter, a closed-class-plus-suffix POS
guesser, a flat single-head dependency scheme (everything attaches to the
main verb, first preverbal nominal marked as the subject), per-chapter
name-run clustering, and an optional tiny polarity scorer. Quality is
deliberately modest; the contract is that the emission always passes the
engine's validation with an empty report.
"""

from __future__ import annotations

import math
import re

from .segmentation import ChapterSlice

_TOKEN_RE = re.compile(r"[A-Za-z]+(?:'[A-Za-z]+)?\.?|[0-9]+|[^\sA-Za-z0-9]")

_ABBREVIATIONS = {"mr.", "mrs.", "ms.", "dr.", "st.", "capt.", "prof.", "rev.", "col.", "gen."}

_HONORIFICS = _ABBREVIATIONS | {"captain", "professor", "lady", "lord", "sir", "miss", "aunt", "uncle"}

_CLOSERS = {'"', "”", "’", ")", "]", "'"}

_DETERMINERS = {"a", "an", "the", "this", "that", "these", "those", "every", "each", "some", "any", "no", "all"}
_PRONOUNS = {
    "i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us", "them",
    "my", "your", "his", "its", "our", "their", "mine", "yours", "hers", "ours", "theirs",
    "myself", "yourself", "himself", "herself", "itself", "ourselves", "themselves",
    "who", "whom", "whose", "which", "what", "nobody", "someone", "anyone", "everyone",
}
_AUXILIARIES = {
    "am", "is", "are", "was", "were", "be", "been", "being",
    "have", "has", "had", "do", "does", "did",
    "will", "would", "shall", "should", "can", "could", "may", "might", "must",
}
_ADPOSITIONS = {
    "in", "on", "at", "by", "for", "with", "from", "to", "of", "into", "over", "under",
    "through", "against", "between", "beyond", "near", "beside", "without", "about",
    "across", "after", "before", "behind", "during", "toward", "upon", "within",
}
_CONJUNCTIONS = {"and", "but", "or", "nor", "yet", "so"}
_SUBORDINATORS = {"because", "although", "though", "while", "if", "unless", "until", "since", "when", "where", "as", "that"}
_ADVERBS = {"not", "never", "always", "often", "soon", "here", "there", "now", "then", "again", "too", "very", "once", "twice", "down", "up", "out", "away", "back", "home", "hardly", "only", "also"}
_INTERJECTIONS = {"yes", "no", "oh", "ah", "well", "alas"}
_COMMON_VERBS = {
    "say", "said", "says", "go", "went", "goes", "gone", "come", "came", "comes",
    "see", "saw", "seen", "know", "knew", "known", "make", "made", "take", "took",
    "get", "got", "give", "gave", "think", "thought", "tell", "told", "ask", "asked",
    "look", "looked", "want", "wanted", "walk", "walked", "run", "ran", "sit", "sat",
    "stand", "stood", "keep", "kept", "read", "write", "wrote", "written", "cry", "cried",
    "laugh", "laughed", "smile", "smiled", "feel", "felt", "hear", "heard", "find", "found",
    "leave", "left", "bring", "brought", "begin", "began", "call", "called", "turn", "turned",
    "live", "lived", "watch", "watched", "wait", "waited", "speak", "spoke", "answer", "answered",
}
_COMMON_ADJECTIVES = {
    "good", "bad", "old", "young", "new", "small", "little", "big", "great", "long",
    "happy", "sad", "dark", "bright", "quiet", "loud", "kind", "brave", "calm", "strange",
    "poor", "rich", "strong", "weak", "warm", "cold", "white", "black", "red", "blue",
    "tall", "short", "proud", "tired", "careful", "reckless", "gentle", "sharp", "soft",
}

_IRREGULAR_LEMMAS = {
    "said": "say", "went": "go", "gone": "go", "came": "come", "saw": "see", "seen": "see",
    "knew": "know", "known": "know", "made": "make", "took": "take", "got": "get",
    "gave": "give", "thought": "think", "told": "tell", "ran": "run", "sat": "sit",
    "stood": "stand", "kept": "keep", "wrote": "write", "written": "write", "cried": "cry",
    "felt": "feel", "heard": "hear", "found": "find", "left": "leave", "brought": "bring",
    "began": "begin", "spoke": "speak", "wept": "weep", "was": "be", "were": "be",
    "is": "be", "are": "be", "am": "be", "been": "be", "being": "be", "has": "have",
    "had": "have", "did": "do", "does": "do", "men": "man", "women": "woman", "children": "child",
}

_POLARITY = {
    "good": 1.5, "great": 2.0, "happy": 2.5, "love": 3.0, "kind": 1.5, "brave": 2.0,
    "smile": 1.8, "laugh": 1.8, "joy": 2.8, "calm": 1.2, "bright": 1.4, "hope": 1.8,
    "bad": -2.0, "sad": -2.2, "fear": -2.0, "cry": -1.8, "dark": -1.0, "storm": -1.0,
    "hate": -3.0, "death": -2.8, "weep": -2.2, "angry": -2.3, "terrible": -2.8, "lonely": -2.0,
}


def tokenize(text: str, start: int, end: int) -> list[dict]:
    """Offset-true tokens for one chapter slice."""
    tokens = []
    for m in _TOKEN_RE.finditer(text, start, end):
        surface = m.group(0)
        # keep the trailing period only for known abbreviations
        if surface.endswith(".") and len(surface) > 1 and surface.lower() not in _ABBREVIATIONS:
            surface = surface[:-1]
        tokens.append({"start": m.start(), "end": m.start() + len(surface), "surface": surface})
        if m.group(0) != surface:
            tokens.append({"start": m.end() - 1, "end": m.end(), "surface": "."})
    return tokens


def split_sentences(tokens: list[dict]) -> list[list[dict]]:
    sentences: list[list[dict]] = []
    current: list[dict] = []
    closing = False
    for tok in tokens:
        surface = tok["surface"]
        if closing and surface not in _CLOSERS:
            if current:
                sentences.append(current)
            current = []
            closing = False
        current.append(tok)
        if surface in {".", "!", "?"}:
            closing = True
    if current:
        sentences.append(current)
    return sentences


def _lemma(surface: str, pos: str) -> str:
    lower = surface.lower()
    if lower in _IRREGULAR_LEMMAS:
        return _IRREGULAR_LEMMAS[lower]
    if pos in ("VERB", "NOUN") and len(lower) > 3:
        if lower.endswith("ies"):
            return lower[:-3] + "y"
        if lower.endswith("sses") or lower.endswith("shes") or lower.endswith("ches"):
            return lower[:-2]
        if lower.endswith("s") and not lower.endswith("ss"):
            return lower[:-1]
    if pos == "VERB" and len(lower) > 4:
        if lower.endswith("ing"):
            stem = lower[:-3]
            return stem + "e" if stem.endswith(("v", "s", "c", "g")) else stem
        if lower.endswith("ed"):
            stem = lower[:-2]
            return stem if not stem.endswith(("i",)) else stem[:-1] + "y"
    return lower


def tag(sentence: list[dict], sentence_initial: bool = True) -> None:
    """Assign a universal POS tag (in place) to every token."""
    for i, tok in enumerate(sentence):
        surface = tok["surface"]
        lower = surface.lower()
        if not surface[0].isalnum():
            pos = "PUNCT"
        elif surface.isdigit():
            pos = "NUM"
        elif lower in _PRONOUNS:
            pos = "PRON"
        elif lower in _DETERMINERS:
            pos = "DET"
        elif lower in _AUXILIARIES:
            pos = "AUX"
        elif lower in _ADPOSITIONS:
            pos = "ADP"
        elif lower in _CONJUNCTIONS:
            pos = "CCONJ"
        elif lower in _SUBORDINATORS:
            pos = "SCONJ"
        elif lower in _INTERJECTIONS:
            pos = "INTJ"
        elif lower in _ADVERBS or (lower.endswith("ly") and len(lower) > 3):
            pos = "ADV"
        elif lower in _COMMON_VERBS:
            pos = "VERB"
        elif lower in _COMMON_ADJECTIVES:
            pos = "ADJ"
        elif surface[0].isupper() and not (i == 0 or _is_opening(sentence, i)):
            pos = "PROPN"
        elif surface[0].isupper() and surface.rstrip(".").istitle() and lower.rstrip(".") not in _COMMON_VERBS:
            # sentence-initial capitalized word: proper noun only if it
            # recurs capitalized elsewhere; the caller refines this later
            pos = "NOUN"
        elif lower.endswith(("ed", "ing")) and len(lower) > 4:
            pos = "VERB"
        else:
            pos = "NOUN"
        tok["pos"] = pos
    # right-to-left pass: capitalized words and honorifics directly before a
    # proper noun join the name run ("Anne Marlow", "Mrs. Penn")
    for i in range(len(sentence) - 2, -1, -1):
        tok, nxt = sentence[i], sentence[i + 1]
        if nxt["pos"] != "PROPN":
            continue
        lower = tok["surface"].lower()
        capitalized = tok["surface"][0].isupper() and tok["pos"] in ("NOUN", "PROPN")
        if capitalized or lower in _HONORIFICS:
            tok["pos"] = "PROPN"
    for tok in sentence:
        tok["lemma"] = _lemma(tok["surface"], tok["pos"])


def _is_opening(sentence: list[dict], index: int) -> bool:
    """True when every earlier token is an opening mark."""
    return all(not t["surface"][0].isalnum() for t in sentence[:index])


def promote_recurring_names(sentences: list[list[dict]]) -> None:
    """Sentence-initial capitalized words that also occur as PROPN elsewhere
    become PROPN, so name mentions do not depend on position."""
    proper = {t["surface"] for sent in sentences for t in sent if t["pos"] == "PROPN"}
    for sent in sentences:
        for tok in sent:
            if tok["pos"] == "NOUN" and tok["surface"] in proper:
                tok["pos"] = "PROPN"
                tok["lemma"] = _lemma(tok["surface"], "PROPN")


def parse(sentence: list[dict]) -> None:
    """Flat dependency scheme: one root (main verb when present), the first
    preverbal nominal as its subject, everything else attached to the root."""
    root = next((i for i, t in enumerate(sentence) if t["pos"] == "VERB"), None)
    if root is None:
        root = next((i for i, t in enumerate(sentence) if t["pos"] not in ("PUNCT",)), 0)
    subject = next(
        (i for i, t in enumerate(sentence[:root]) if t["pos"] in ("NOUN", "PROPN", "PRON")),
        None,
    )
    for i, tok in enumerate(sentence):
        if i == root:
            tok["head"], tok["deprel"] = i, "root"
        elif i == subject:
            tok["head"], tok["deprel"] = root, "nsubj"
        elif tok["pos"] == "PUNCT":
            tok["head"], tok["deprel"] = root, "punct"
        else:
            tok["head"], tok["deprel"] = root, "dep"


def name_clusters(sentences: list[list[dict]], chapter: ChapterSlice) -> list[dict]:
    """One cluster per distinct proper-name run in the chapter."""
    runs: dict[str, list[list[int]]] = {}
    for sent in sentences:
        i = 0
        while i < len(sent):
            if sent[i]["pos"] == "PROPN":
                j = i
                while j + 1 < len(sent) and sent[j + 1]["pos"] == "PROPN":
                    j += 1
                key = " ".join(t["surface"] for t in sent[i : j + 1]).lower()
                runs.setdefault(key, []).append([sent[i]["start"], sent[j]["end"]])
                i = j + 1
            else:
                i += 1
    clusters = []
    for n, (key, mentions) in enumerate(sorted(runs.items())):
        unique = sorted({tuple(m) for m in mentions})
        clusters.append(
            {
                "id": f"ch{chapter.index}-n{n}",
                "mentions": [list(m) for m in unique],
                "source_chapter": chapter.index,
                "hint": key.title(),
            }
        )
    return clusters


def subject_verb_propositions(sentences: list[list[dict]], sentence_offset: int) -> list[dict]:
    props = []
    for k, sent in enumerate(sentences):
        verbs = [i for i, t in enumerate(sent) if t["pos"] == "VERB"]
        subjects = [i for i, t in enumerate(sent) if t["deprel"] == "nsubj"]
        if not verbs or not subjects:
            continue
        verb, subject = verbs[0], subjects[0]
        props.append(
            {
                "sentence": sentence_offset + k,
                "args": [
                    {"role": "ARG0", "start": sent[subject]["start"], "end": sent[subject]["end"]},
                    {"role": "V", "start": sent[verb]["start"], "end": sent[verb]["end"]},
                ],
            }
        )
    return props


def naive_sentiment(sentence: list[dict]) -> float:
    total = sum(_POLARITY.get(t["lemma"], 0.0) for t in sentence)
    return total / math.sqrt(total * total + 15.0)
