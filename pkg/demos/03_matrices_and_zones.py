"""Assemble the view structures: occurrence matrices, word zones, and the
context overlay, rendered here as plain text.

The matrices are what the companion UI draws as heat-map cards; every cell
carries evidence spans, so hovering a cell can always highlight the exact
text that produced it.
"""

from importlib import resources

from charlens import parse_annotations, sample
from charlens.analysis import AnalysisConfig, Snapshot, run_analysis
from charlens.dynamics import parse_embeddings
from charlens.lexicons import load_emotion_lexicon, load_sentiment_lexicon
from charlens.registry import CharacterRegistry
from charlens.views import (
    build_matrix,
    build_wordzone,
    cooccurrence,
    default_context_labels,
    layout_contexts,
)

story = sample.build()
doc = story.document()
layer = parse_annotations(story.payload, doc)
registry = CharacterRegistry(layer, doc)
sample.curate(registry)

table = parse_embeddings(resources.files("charlens.data").joinpath("sample_embeddings.txt").read_text())
config = AnalysisConfig()
result = run_analysis(
    doc, layer, registry, config,
    sentiment_lexicon=load_sentiment_lexicon(),
    emotion_lexicon=load_emotion_lexicon(),
    table=table,
)
snapshot = Snapshot(doc=doc, layer=layer, registry=registry, result=result, table=table, config=config)

SHADES = " .:*#"


def shade(normalized):
    return SHADES[min(int(normalized * (len(SHADES) - 1) + 0.5), len(SHADES) - 1)]


for kind in ("presence", "speech", "sentiment", "action_change"):
    matrix = build_matrix(snapshot, kind)
    print(f"{kind} card (columns = chapters {list(matrix.columns)}):")
    for row_name, row in zip(matrix.row_names, matrix.cells):
        cells = "".join("[" + (shade(c.normalized) if c and c.normalized is not None else " ") + "]" for c in row)
        values = " ".join(f"{c.value:+.2f}" if c and isinstance(c.value, float) else str(c.value) if c else "-" for c in row)
        print(f"  {row_name:<14} {cells}  ({values})")
    print()

emotion = build_matrix(snapshot, "emotion")
print("emotion card (modal label per chapter):")
for row_name, row in zip(emotion.row_names, emotion.cells):
    print(f"  {row_name:<14}", [c.value if c else "-" for c in row])

print("\nco-occurrence with Anne, per chapter:")
for chapter in range(3):
    ids = cooccurrence(snapshot, "c0-anne", chapter)
    print(f"  chapter {chapter}:", sorted(registry.character(i).display_name for i in ids))

print("\nword zones (weight = tf/df, cluster = semantic group):")
for kind in ("actions", "definitions"):
    zone = build_wordzone(snapshot, "c0-anne", kind)
    print(f"  Anne Marlow / {kind}:")
    for entry in zone.entries[:8]:
        print(f"    #{entry.rank} {entry.lemma:<10} weight {entry.weight:.3f} cluster {entry.cluster}")

print("\ncontext overlay (rows avoid horizontal overlap):")
layout = layout_contexts(default_context_labels(snapshot), max_rows=2, chapter_count=3)
for placement in layout.placements:
    where = f"row {placement.row}" if placement.row is not None else "dropped"
    print(f"  {placement.text!r} @ chapter {placement.chapter} width {placement.width:.1f} -> {where}")
