"""HTTP surface: endpoints, wire formats, error mapping."""

import pytest
from fastapi.testclient import TestClient

from latcrit.service.app import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_info_expression(client):
    resp = client.post("/v1/info", json={"lattice": "diag(1,1,2)"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["rank"] == 3 and body["det"] == 2
    assert body["min_norm"] == 1 and body["min_dual_norm"] == "1/2"
    assert body["gram"].startswith("3\n")


def test_info_gram_text_input(client):
    resp = client.post("/v1/info", json={"lattice": "# unit square\n2\n1 0\n0 1\n"})
    assert resp.status_code == 200
    assert resp.json()["det"] == 1


def test_parse_error_maps_to_422(client):
    resp = client.post("/v1/info", json={"lattice": "diag(1,,2)"})
    assert resp.status_code == 422
    assert "position" in resp.json()["detail"]


def test_shortvec(client):
    resp = client.post("/v1/shortvec", json={"lattice": "diag(1,1)", "bound": "2"})
    body = resp.json()
    assert body["count"] == 4 and body["count_both_signs"] == 8
    assert body["vectors"][0] == {"coords": [0, 1], "norm": 1}


def test_embed_endpoint(client):
    resp = client.post(
        "/v1/embed", json={"target": "diag(1,1,2)", "source": "2*Zn(3)"}
    )
    body = resp.json()
    assert body["found"] and len(body["matrix"]) == 3
    resp = client.post("/v1/embed", json={"target": "diag(1,1)", "source": "2*Zn(3)"})
    assert resp.json() == {"found": False, "matrix": None}


def test_complement_endpoint(client):
    resp = client.post(
        "/v1/complement", json={"lattice": "diag(1,1)", "vectors": [[1, 1]]}
    )
    body = resp.json()
    assert body["rank"] == 1 and body["det"] == 2


def test_dual_endpoint(client):
    resp = client.post("/v1/dual", json={"lattice": "diag(2)"})
    assert resp.json() == {"entries": [["1/2"]], "integral": False}
    resp = client.post("/v1/dual", json={"lattice": "E8"})
    assert resp.json()["integral"] is True


def test_decompose_endpoint(client):
    resp = client.post("/v1/decompose", json={"lattice": "diag(1,1,2)"})
    body = resp.json()
    assert not body["indecomposable"]
    assert [s["rank"] for s in body["summands"]] == [1, 1, 1]
    assert [s["det"] for s in body["summands"]] == [1, 1, 2]


def test_enumerate_endpoint(client):
    resp = client.post("/v1/enumerate", json={"rank": 2, "max_diag": 2})
    body = resp.json()
    assert body["count"] == 4 and len(body["grams"]) == 4
    resp = client.post(
        "/v1/enumerate", json={"rank": 2, "max_diag": 2, "count_only": True}
    )
    assert resp.json() == {"count": 4, "grams": []}


def test_check_criterion_endpoint(client):
    req = {
        "base": "diag(1,1,2)",
        "members": ["diag(1,1)", "2*Zn(3)"],
        "space": {"rank": 3, "max_diag": 3},
    }
    resp = client.post("/v1/check-criterion", json=req)
    body = resp.json()
    assert body["verdict"] == "verified-within-space"
    assert body["counterexample"] is None

    req["members"] = ["diag(1,1)"]
    body = client.post("/v1/check-criterion", json=req).json()
    assert body["verdict"] == "counterexample"
    assert body["counterexample"]["gram"].startswith("3\n")
    assert body["counterexample"]["missing"].startswith("3\n")


def test_check_criterion_bad_member_maps_to_422(client):
    req = {
        "base": "diag(1,1)",
        "members": ["diag(1,1,2)"],
        "space": {"rank": 2, "max_diag": 2},
    }
    assert client.post("/v1/check-criterion", json=req).status_code == 422


def test_check_minimality_endpoint(client):
    req = {
        "base": "diag(1,1,2)",
        "members": ["diag(1,1)", "2*Zn(3)"],
        "witnesses": ["diag(1,1)", "2*Zn(3)"],
        "space": {"rank": 3, "max_diag": 2},
    }
    body = client.post("/v1/check-minimality", json=req).json()
    assert body["all_witnessed"]
    assert all(e["witness_origin"] == "provided" for e in body["entries"])


def test_prop2_endpoint(client):
    body = client.post(
        "/v1/check-prop2", json={"l": "E6", "l_prime": "Zn(1)"}
    ).json()
    assert body == {"holds": True, "dual_min": "4/3", "generating_bound": 1}


def test_prop3_endpoint(client):
    req = {"ground": ["E8", "Zn(1)"], "parts": [[0], [1]]}
    body = client.post("/v1/check-prop3", json=req).json()
    assert body["passed"] and body["coprime_ok"]
    assert len(body["criterion_set"]) == 2


def test_json_reports_are_reproducible(client):
    req = {
        "base": "diag(1,1,2)",
        "members": ["diag(1,1)"],
        "space": {"rank": 3, "max_diag": 2},
    }
    first = client.post("/v1/check-criterion", json=req).content
    second = client.post("/v1/check-criterion", json=req).content
    assert first == second
