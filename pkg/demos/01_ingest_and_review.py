"""Walk through ingestion and cluster review on the bundled sample story.

The engine never decides who the characters are. Coreference clusters come
in chapter-scoped and anonymous; a reviewer names them, merges the ones
that denote the same person, and tags recurring places as context. This
script plays that reviewer.
"""

from charlens import parse_annotations, sample
from charlens.registry import CharacterRegistry

story = sample.build()
doc = story.document()

print(f"document {doc.id}: {len(doc.text)} characters of text")
for chapter in doc.chapters:
    print(f"  chapter {chapter.index}: {chapter.title!r} spanning {chapter.span.as_pair()}")

layer = parse_annotations(story.payload, doc)
print(f"\nannotation layer: {len(layer.tokens)} tokens, {len(layer.sentences)} sentences, "
      f"{len(layer.clusters)} clusters, {len(layer.propositions)} propositions")

registry = CharacterRegistry(layer, doc)
print("\nraw cluster review queue:")
for row in registry.list_clusters():
    samples = ", ".join(repr(s) for s in row["samples"][:3])
    print(f"  {row['cluster_id']:<10} ch{row['source_chapter']} n={row['mention_count']:<3} {samples}")

# before curation nothing counts as a character
print("\ncharacters before review:", [c.display_name for c in registry.characters])

# name-overlap suggestions give the reviewer a head start
print("\ntop merge suggestions:")
for s in registry.suggest_merges(limit=5):
    print(f"  merge {s['source']} into {s['target']} (score {s['score']})")

sample.curate(registry)
print("\nafter review:")
for char in registry.characters:
    chapters = sorted({doc.chapter_for_offset(m.start) for m in char.mentions})
    print(f"  character {char.display_name!r}: {len(char.mentions)} mentions across chapters {chapters}")
for tag in registry.context_tags:
    print(f"  context   {tag.name!r}: {len(tag.mentions)} mentions")
