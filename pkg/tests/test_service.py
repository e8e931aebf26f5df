import random

import pytest
from fastapi.testclient import TestClient

from narrowdots.service import create_app


@pytest.fixture()
def client():
    return TestClient(create_app())


def new_game(client, game="triangles", boundary="closed", n=4,
             engine_mode="constructive", **kw):
    body = {"spec": {"game": game, "boundary": boundary, "n": n},
            "engine_mode": engine_mode} | kw
    r = client.post("/games", json=body)
    assert r.status_code == 201, r.text
    return r.json()


def test_new_game_engine_first_opens_immediately(client):
    data = new_game(client, engine_role="first")
    assert data["engine_moves"] == ["slant:3"]
    assert data["state"]["to_move"] == "B"
    assert data["state"]["net_score"] == 0


def test_new_game_engine_second_waits(client):
    data = new_game(client, engine_role="second")
    assert data["engine_moves"] == []
    assert data["state"]["to_move"] == "A"


def test_unsupported_constructive_spec_rejected(client):
    r = client.post("/games", json={
        "spec": {"game": "triangles", "boundary": "closed", "n": 2},
        "engine_role": "second", "engine_mode": "constructive"})
    assert r.status_code == 422
    assert r.json()["code"] == "unsupported_spec"


def test_solver_mode_accepts_any_spec(client):
    data = new_game(client, n=2, engine_role="first", engine_mode="solver")
    assert data["engine_moves"]


def test_engine_mode_defaults_to_solver(client):
    r = client.post("/games", json={
        "spec": {"game": "triangles", "boundary": "closed", "n": 2},
        "engine_role": "second"})
    assert r.status_code == 201


def test_constructive_boxes_opening_is_the_center_string(client):
    data = new_game(client, game="boxes", n=4, engine_role="first")
    assert data["engine_moves"] == ["vert:2"]


def test_move_applies_and_engine_replies_atomically(client):
    data = new_game(client, engine_role="first")
    gid = data["id"]
    edge = data["state"]["legal_moves"][0]
    r = client.post(f"/games/{gid}/moves", json={"edge": edge})
    assert r.status_code == 200
    out = r.json()
    assert out["played"] == [edge]
    state = out["state"]
    # either the game ended or it is the human's turn again after the
    # engine's full reply arrives in the same payload
    assert state["to_move"] == "B" or not state["legal_moves"]
    assert edge in state["drawn"]
    for e in out["engine_moves"]:
        assert e in state["drawn"]


def test_illegal_and_out_of_turn_moves_rejected(client):
    data = new_game(client, engine_role="first")
    gid = data["id"]
    drawn_edge = data["state"]["drawn"][0]
    r = client.post(f"/games/{gid}/moves", json={"edge": drawn_edge})
    assert r.status_code == 409
    assert r.json()["code"] == "illegal_move"
    r = client.post(f"/games/{gid}/moves", json={"edge": "vert:9"})
    assert r.status_code == 422
    # the state is unchanged after rejected moves
    r = client.get(f"/games/{gid}")
    assert r.json()["state"]["drawn"] == data["state"]["drawn"]


def test_unknown_game_id(client):
    assert client.get("/games/404").status_code == 404
    r = client.post("/games/404/moves", json={"edge": "base:0"})
    assert r.status_code == 404
    assert r.json()["code"] == "unknown_game"


def test_full_random_game_against_engine(client):
    rng = random.Random(50)
    data = new_game(client, engine_role="first")
    gid = data["id"]
    state = data["state"]
    while state["legal_moves"]:
        edge = rng.choice(state["legal_moves"])
        r = client.post(f"/games/{gid}/moves", json={"edge": edge})
        assert r.status_code == 200
        state = r.json()["state"]
    # the certified guarantee: the engine (player A) wins by at least 1
    assert state["net_score"] >= 1
    assert len(state["owners"]) == 7


def test_score_always_consistent_with_owners(client):
    rng = random.Random(51)
    data = new_game(client, game="boxes", n=4, engine_role="second")
    gid = data["id"]
    state = data["state"]
    while state["legal_moves"]:
        edge = rng.choice(state["legal_moves"])
        state = client.post(f"/games/{gid}/moves",
                            json={"edge": edge}).json()["state"]
        a = sum(1 for o in state["owners"] if o["player"] == "A")
        b = sum(1 for o in state["owners"] if o["player"] == "B")
        assert state["net_score"] == a - b


def test_analysis_endpoint(client):
    data = new_game(client, n=3, engine_role="none")
    gid = data["id"]
    r = client.get(f"/games/{gid}/analysis")
    assert r.status_code == 200
    a = r.json()
    assert a["value_for_mover"] == 5
    assert a["best_edge"] == "base:1"
    assert a["edge_classes"]["base:0"] == "bad"
    assert a["edge_classes"]["slant:0"] == "good"
    assert len(a["chains"]) == 3


def test_game_over_rejects_moves(client):
    data = new_game(client, game="boxes", boundary="closed", n=1,
                    engine_role="none")
    gid = data["id"]
    r = client.post(f"/games/{gid}/moves", json={"edge": "bottom:0"})
    assert r.status_code == 200
    assert r.json()["state"]["legal_moves"] == []
    r = client.post(f"/games/{gid}/moves", json={"edge": "bottom:0"})
    assert r.status_code == 409
    assert r.json()["code"] == "game_over"
