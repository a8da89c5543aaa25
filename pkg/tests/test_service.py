from fastapi.testclient import TestClient

from g2crystal.service import app

client = TestClient(app)


def test_healthz():
    assert client.get("/healthz").json() == {"ok": True}


def test_component_endpoint():
    resp = client.get("/component", params={"word": "1 -1"})
    assert resp.status_code == 200
    assert resp.json() == {
        "vertices": ["1 -1"],
        "edges": [],
        "highest_weight": "1 -1",
    }
    big = client.get("/component", params={"word": "1 1"}).json()
    assert len(big["vertices"]) == 27


def test_component_dot():
    resp = client.get("/component.dot", params={"word": "1"})
    assert resp.status_code == 200
    assert resp.text.startswith("digraph crystal {")


def test_component_bad_word():
    resp = client.get("/component", params={"word": "1 5"})
    assert resp.status_code == 422
    assert "5" in resp.json()["detail"]


def test_insert_endpoint():
    resp = client.get("/insert", params={"word": "1 -1"})
    body = resp.json()
    assert body["p"]["columns"] == []
    assert body["q"] == [[1, 0], [0, 0]]

    resp = client.get("/insert", params={"word": ""})
    body = resp.json()
    assert body["p"]["columns"] == [] and body["q"] == []


def test_equiv_endpoint():
    assert client.get("/equiv", params={"w1": "1 0", "w2": "1"}).json()["equivalent"]
    assert not client.get("/equiv", params={"w1": "1 2", "w2": "2 1"}).json()[
        "equivalent"
    ]


def test_tableaux_endpoint():
    body = client.get("/tableaux", params={"l1": 0, "l2": 1}).json()
    assert body["count"] == 14
    assert body["tableaux"][0]["reading"] == "1 2"
    assert client.get("/tableaux", params={"l1": -1, "l2": 0}).status_code == 422


def test_canonical_endpoint():
    body = client.get("/canonical", params={"l1": 1, "l2": 0}).json()
    assert body["tableaux"] == ["1", "2", "3", "0", "-3", "-2", "-1"]
    assert all(len(col["terms"]) == 1 for col in body["columns"])

    csv_text = client.get("/canonical.csv", params={"l1": 0, "l2": 1}).text
    lines = csv_text.strip().split("\n")
    assert len(lines) == 23
    header = lines[0].split(",")
    assert header[1] == "1 2"


def test_canonical_deterministic():
    a = client.get("/canonical.csv", params={"l1": 1, "l2": 1}).text
    b = client.get("/canonical.csv", params={"l1": 1, "l2": 1}).text
    assert a == b


def test_selftest_endpoint():
    body = client.get("/selftest", params={"max_len": 2}).json()
    assert body["ok"] is True
    assert len(body["suites"]) >= 10
    assert all(s["passed"] for s in body["suites"])
