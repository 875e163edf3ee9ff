"""Drive the HTTP API end to end, the way the web client does.

Create a project, import annotations, curate clusters over the wire, run
the analysis, and read back matrices, word zones, co-occurrence sets, and
the context layout.
"""

import json

from fastapi.testclient import TestClient

from charlens import sample
from charlens.service import ProjectStore, create_app

client = TestClient(create_app(ProjectStore()))
story = sample.build()

created = client.post("/projects", json={"text": story.text, "id": "demo"}).json()
print("created project:", created["id"], "with", len(created["chapters"]), "chapters")

imported = client.post("/projects/demo/annotations", json=json.loads(story.payload)).json()
print("imported annotations:", imported)

for op, *args in sample.CURATION:
    if op == "label":
        client.patch("/projects/demo/clusters", json={"cluster_id": args[0], "label": args[1]})
    elif op == "name":
        client.patch("/projects/demo/clusters", json={"cluster_id": args[0], "name": args[1]})
    else:
        client.post("/projects/demo/clusters/merge", json={"source": args[0], "target": args[1]})
print("curated; revision:", client.get("/projects/demo").json()["revision"])

print("status before analysis:", client.get("/projects/demo/status").json())
print("analyze:", client.post("/projects/demo/analyze").json())

matrix = client.get("/projects/demo/matrix", params={"kind": "presence"}).json()
print("\npresence matrix rows:", matrix["row_names"])
for name, row in zip(matrix["row_names"], matrix["cells"]):
    print(f"  {name:<14}", [cell["value"] if cell else None for cell in row])

# drill down: click a cell -> sentence-level columns for that chapter
sentence_view = client.get(
    "/projects/demo/matrix", params={"kind": "speech", "level": "sentence", "chapter": 2}
).json()
print("\nsentence-level speech columns for chapter 2:", sentence_view["columns"])

# the evidence spans in any cell can be resolved back to text
for name, row in zip(sentence_view["row_names"], sentence_view["cells"]):
    for cell in row:
        if cell:
            start, end = cell["evidence"][0]
            quote = client.get("/projects/demo/text", params={"start": start, "end": end}).json()["text"]
            print(f"  {name} speaks: “{quote}”")
            break

zone = client.get("/projects/demo/wordzone", params={"character": "c0-rook", "kind": "actions"}).json()
print("\nRook's action zone:", [(e["lemma"], round(e["weight"], 3)) for e in zone["entries"][:6]])

cooc = client.get("/projects/demo/cooccurrence", params={"character": "c0-anne", "chapter": 0}).json()
print("co-occurring with Anne in chapter 0:", cooc["cooccurring"])

contexts = client.get("/projects/demo/contexts", params={"max_rows": 2}).json()
print("context overlay:", [(p["text"], p["chapter"], p["row"]) for p in contexts["placements"]])

csv_export = client.get("/projects/demo/matrix", params={"kind": "presence", "format": "csv"})
print("\nCSV export:")
print(csv_export.text)
