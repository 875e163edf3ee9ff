import json

import pytest
from fastapi.testclient import TestClient

from charlens import sample as sample_mod
from charlens.service import ProjectStore, create_app


@pytest.fixture()
def client():
    return TestClient(create_app(ProjectStore()))


@pytest.fixture()
def project_id(client, story):
    created = client.post("/projects", json={"text": story.text, "id": "sample"})
    assert created.status_code == 201
    assert client.post("/projects/sample/annotations", json=json.loads(story.payload)).status_code == 200
    for op, *args in sample_mod.CURATION:
        if op == "label":
            r = client.patch("/projects/sample/clusters", json={"cluster_id": args[0], "label": args[1]})
        elif op == "name":
            r = client.patch("/projects/sample/clusters", json={"cluster_id": args[0], "name": args[1]})
        else:
            r = client.post("/projects/sample/clusters/merge", json={"source": args[0], "target": args[1]})
        assert r.status_code == 200
    return "sample"


def test_create_then_full_text_roundtrip(client, story):
    client.post("/projects", json={"text": story.text, "id": "t"})
    body = client.get("/projects/t/text").json()
    assert body["text"] == story.text


def test_unknown_project_404(client):
    response = client.get("/projects/ghost")
    assert response.status_code == 404
    assert response.json()["code"] == "unknown_project"


def test_text_slice(client, story, project_id):
    at = story.text.index("Anne Marlow")
    body = client.get(f"/projects/{project_id}/text", params={"start": at, "end": at + 11}).json()
    assert body["text"] == "Anne Marlow"


def test_text_slice_out_of_range(client, project_id):
    response = client.get(f"/projects/{project_id}/text", params={"start": 0, "end": 10**6})
    assert response.status_code == 400
    assert response.json()["code"] == "span_out_of_range"


def test_bad_annotations_rejected_project_unchanged(client, story):
    client.post("/projects", json={"text": story.text, "id": "x"})
    before = client.get("/projects/x").json()["revision"]
    bad = {"format_version": 1, "tokens": [], "sentences": [{"start": 0, "end": 99999, "chapter": 0}]}
    response = client.post("/projects/x/annotations", json=bad)
    assert response.status_code == 400
    assert client.get("/projects/x").json()["revision"] == before


def test_cluster_listing(client, project_id):
    rows = client.get(f"/projects/{project_id}/clusters").json()["clusters"]
    assert len(rows) == 14
    merged = {r["cluster_id"]: r["merged_into"] for r in rows}
    assert merged["c1-anne"] == "c0-anne"


def test_merge_cycle_rejected(client, project_id):
    response = client.post(
        f"/projects/{project_id}/clusters/merge", json={"source": "c0-anne", "target": "c2-anne"}
    )
    assert response.status_code == 400
    assert response.json()["code"] == "cycle_error"


def test_analyze_and_status(client, project_id):
    assert client.get(f"/projects/{project_id}/status").json() == {"state": "empty", "last_run": None}
    status = client.post(f"/projects/{project_id}/analyze").json()
    assert status["state"] == "current"
    revision = client.get(f"/projects/{project_id}").json()["revision"]
    assert status["last_run"] == revision
    # registry mutation makes the analysis stale
    client.patch(f"/projects/{project_id}/clusters", json={"cluster_id": "c0-anne", "name": "Anne"})
    assert client.get(f"/projects/{project_id}/status").json()["state"] == "stale"


def test_analyze_without_annotations(client, story):
    client.post("/projects", json={"text": story.text, "id": "bare"})
    response = client.post("/projects/bare/analyze")
    assert response.status_code == 400
    assert response.json()["code"] == "not_ready"


def test_all_matrix_kinds_served(client, project_id):
    client.post(f"/projects/{project_id}/analyze")
    for kind in ("presence", "speech", "sentiment", "emotion", "action_change"):
        response = client.get(f"/projects/{project_id}/matrix", params={"kind": kind})
        assert response.status_code == 200, kind
        body = response.json()
        assert body["kind"] == kind
        assert body["rows"] == ["c0-anne", "c0-rook", "c0-penn"]
        assert body["columns"] == [0, 1, 2]


def test_sentence_level_matrix(client, project_id):
    client.post(f"/projects/{project_id}/analyze")
    body = client.get(
        f"/projects/{project_id}/matrix", params={"kind": "presence", "level": "sentence", "chapter": 2}
    ).json()
    assert len(body["columns"]) == 20


def test_matrix_before_analysis_not_ready(client, project_id):
    response = client.get(f"/projects/{project_id}/matrix", params={"kind": "presence"})
    assert response.status_code == 400
    assert response.json()["code"] == "not_ready"


def test_wordzone_endpoint(client, project_id):
    client.post(f"/projects/{project_id}/analyze")
    body = client.get(
        f"/projects/{project_id}/wordzone", params={"character": "c0-anne", "kind": "definitions"}
    ).json()
    lemmas = {e["lemma"] for e in body["entries"]}
    assert {"brave", "happy", "fearless", "proud"} <= lemmas


def test_cooccurrence_endpoint(client, project_id):
    client.post(f"/projects/{project_id}/analyze")
    body = client.get(
        f"/projects/{project_id}/cooccurrence", params={"character": "c0-anne", "chapter": 1}
    ).json()
    assert body["cooccurring"] == ["c0-rook"]


def test_contexts_endpoint(client, project_id):
    client.post(f"/projects/{project_id}/analyze")
    body = client.get(f"/projects/{project_id}/contexts", params={"max_rows": 2}).json()
    assert body["max_rows"] == 2
    texts = {p["text"] for p in body["placements"]}
    assert "Harborside" in texts


def test_matrix_csv_format(client, project_id):
    client.post(f"/projects/{project_id}/analyze")
    response = client.get(f"/projects/{project_id}/matrix", params={"kind": "presence", "format": "csv"})
    assert response.headers["content-type"].startswith("text/csv")
    lines = response.text.strip().splitlines()
    assert lines[0] == "character,0,1,2"
    assert lines[1].startswith("Anne Marlow,")


def test_analysis_idempotent_over_http(client, project_id):
    client.post(f"/projects/{project_id}/analyze")
    first = client.get(f"/projects/{project_id}/matrix", params={"kind": "sentiment"}).content
    client.post(f"/projects/{project_id}/analyze")
    second = client.get(f"/projects/{project_id}/matrix", params={"kind": "sentiment"}).content
    assert first == second


def test_merge_conservation_under_any_arrival_order(client, story):
    # the same merges in different orders give the same character mentions
    totals = []
    for name, order in (("p1", False), ("p2", True)):
        client.post("/projects", json={"text": story.text, "id": name})
        client.post(f"/projects/{name}/annotations", json=json.loads(story.payload))
        client.patch(f"/projects/{name}/clusters", json={"cluster_id": "c0-anne", "label": "character"})
        merges = [("c1-anne", "c0-anne"), ("c2-anne", "c0-anne")]
        for source, target in reversed(merges) if order else merges:
            client.post(f"/projects/{name}/clusters/merge", json={"source": source, "target": target})
        summary = client.get(f"/projects/{name}").json()
        totals.append([c["mentions"] for c in summary["characters"]])
    assert totals[0] == totals[1] == [34]


def test_bad_label_value_structured_400(client, project_id):
    response = client.patch(
        f"/projects/{project_id}/clusters", json={"cluster_id": "c0-anne", "label": "hero"}
    )
    assert response.status_code == 400
    body = response.json()
    assert body["code"] == "invalid_value"
    assert "label" in body["message"]


def test_missing_query_param_structured_400(client, project_id):
    response = client.get(f"/projects/{project_id}/matrix")
    assert response.status_code == 400
    body = response.json()
    assert body["code"] == "bad_request"
    assert "kind" in body.get("location", "")


def test_presence_unit_config(client, story):
    import json as jsonlib

    client.post(
        "/projects",
        json={"text": story.text, "id": "by-sentence", "config": {"presence_unit": "sentences"}},
    )
    client.post("/projects/by-sentence/annotations", json=jsonlib.loads(story.payload))
    client.patch("/projects/by-sentence/clusters", json={"cluster_id": "c0-anne", "label": "character"})
    client.post("/projects/by-sentence/analyze")
    body = client.get("/projects/by-sentence/matrix", params={"kind": "presence"}).json()
    # chapter 0: 12 mentions sit in 10 distinct sentences
    assert body["cells"][0][0]["value"] == 10


def test_concurrent_mutations_serialize(client, story):
    import json as jsonlib
    import threading

    client.post("/projects", json={"text": story.text, "id": "conc"})
    client.post("/projects/conc/annotations", json=jsonlib.loads(story.payload))
    client.patch("/projects/conc/clusters", json={"cluster_id": "c0-anne", "label": "character"})

    merges = [("c1-anne", "c0-anne"), ("c2-anne", "c0-anne"), ("c1-rook", "c0-rook"), ("c2-rook", "c0-rook")]
    patches = [{"cluster_id": "c0-rook", "label": "character"}, {"cluster_id": "c0-rook", "name": "Rook"}]

    def do_merge(source, target):
        client.post("/projects/conc/clusters/merge", json={"source": source, "target": target})

    def do_patch(body):
        client.patch("/projects/conc/clusters", json=body)

    threads = [threading.Thread(target=do_merge, args=m) for m in merges]
    threads += [threading.Thread(target=do_patch, args=(p,)) for p in patches]
    for t in threads:
        t.start()
    for t in threads:
        t.join()

    # all mutations applied in some serial order: revision advanced once per
    # mutation and merge conservation held
    summary = client.get("/projects/conc").json()
    assert summary["revision"] == 2 + len(merges) + len(patches)
    by_name = {c["display_name"]: c["mentions"] for c in summary["characters"]}
    assert by_name["Anne Marlow"] == 34
    assert by_name["Rook"] == 22


def test_unknown_character_in_matrix_404(client, project_id):
    client.post(f"/projects/{project_id}/analyze")
    response = client.get(
        f"/projects/{project_id}/matrix", params={"kind": "presence", "characters": "nobody"}
    )
    assert response.status_code == 404
    assert response.json()["code"] == "unknown_cluster"
