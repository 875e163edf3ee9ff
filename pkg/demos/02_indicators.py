"""Extract all six trait-indicator streams from the sample story.

Presence, direct speech (with speaker attribution), actions, direct
definitions, sentence sentiment, and sentence emotion; every record points
back into the text by character offsets.
"""

from charlens import parse_annotations, sample
from charlens.extractors import (
    attribute_speaker,
    extract_actions,
    extract_definitions,
    extract_quotes,
    label_emotion,
    presence,
    score_sentiment,
)
from charlens.lexicons import load_emotion_lexicon, load_sentiment_lexicon
from charlens.registry import CharacterRegistry

story = sample.build()
doc = story.document()
layer = parse_annotations(story.payload, doc)
registry = CharacterRegistry(layer, doc)
sample.curate(registry)
name = {c.id: c.display_name for c in registry.characters}

print("presence (mentions per chapter):")
for char_id, per in presence(doc, layer, registry).items():
    print(f"  {name[char_id]:<14}", {ch: per.get(ch, 0) for ch in range(len(doc.chapters))})

print("\ndirect speech:")
for quote in (attribute_speaker(q, layer, registry) for q in extract_quotes(doc, layer)):
    who = name.get(quote.speaker, "?") if quote.speaker else "(unresolved)"
    text = doc.text[quote.span.start : quote.span.end]
    print(f"  ch{quote.chapter} {who:<14} [{quote.method:<14}] “{text}”")

print("\nactions (agent-verb pairs):")
for record in extract_actions(layer, registry):
    print(f"  ch{record.chapter} {name[record.character]:<14} {record.verb_lemma:<10} ({record.source})")

print("\ndirect definitions (adjective-subject pairs):")
for record in extract_definitions(layer, registry):
    print(f"  s{record.sentence:<3} {name[record.character]:<14} {record.adjective_lemma:<10} via {record.path}")

sentiment_lexicon = load_sentiment_lexicon()
emotion_lexicon = load_emotion_lexicon()
print("\nper-sentence sentiment and emotion (first 20 sentences):")
for s in range(20):
    senti = score_sentiment(s, layer, sentiment_lexicon)
    emo = label_emotion(s, layer, emotion_lexicon)
    bar = "#" * int(abs(senti.value) * 20)
    sign = "+" if senti.value >= 0 else "-"
    print(f"  s{s:<3} {senti.value:+.3f} {sign}{bar:<20} {emo.label or ''}")
