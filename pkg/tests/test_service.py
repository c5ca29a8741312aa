import json

from fastapi.testclient import TestClient

from graphchomp import engine
from graphchomp.core import Move, apply_move, complex_from_json
from graphchomp.service import create_app


def make_client(**kwargs):
    return TestClient(create_app(**kwargs))


def create_session(client, **body):
    r = client.post("/sessions", json=body)
    assert r.status_code == 201, r.text
    return r.json()


def post_move(client, sid, face):
    return client.post(f"/sessions/{sid}/moves", json={"face": list(face)})


def replay_live_faces(session):
    """Recompute the live set from the full complex and the move log."""
    cx = complex_from_json(
        {"vertices": session["vertices"], "faces": session["faces"]})
    state = cx.state()
    for entry in session["moves"]:
        state = apply_move(state, Move(tuple(entry["face"])))
    return sorted(state.faces())


def test_index_lists_endpoints():
    client = make_client()
    body = client.get("/").json()
    assert "POST /sessions" in body["endpoints"]
    assert "GET /nim?spec=..." in body["endpoints"]


def test_families_endpoint():
    client = make_client()
    body = client.get("/families").json()
    patterns = [row["pattern"] for row in body["families"]]
    assert "kneser:n,k,l" in patterns
    assert all(row["description"] for row in body["families"])


def test_nim_formula():
    client = make_client()
    body = client.get("/nim", params={"spec": "kneser:5,2,0"}).json()
    assert body == {"spec": "kneser:5,2,0", "nim": 2, "outcome": "A",
                    "provenance": "kneser-product-formula",
                    "method": "formula"}


def test_nim_formula_skips_construction():
    # far past the face cap, but the formula never builds the graph
    client = make_client()
    body = client.get("/nim", params={"spec": "kneser:40,3,0"}).json()
    assert body["method"] == "formula" and body["nim"] is not None


def test_nim_engine():
    client = make_client()
    body = client.get("/nim", params={"spec": "threshold:4;3"}).json()
    assert body["method"] == "engine"
    assert body["nim"] == 0 and body["outcome"] == "B"


def test_nim_bad_spec():
    client = make_client()
    r = client.get("/nim", params={"spec": "frobnicate:9"})
    assert r.status_code == 422


def test_nim_outcome_only_fallback_when_capped():
    # a warm shared table would answer within any budget; start cold
    engine.default_table().clear()
    client = make_client(default_budget=50)
    body = client.get("/nim", params={"spec": "threshold:5;2"}).json()
    assert body["method"] == "formula"
    assert body["nim"] is None and body["outcome"] == "B"


def test_nim_out_of_reach_is_503():
    client = make_client(default_budget=5000)
    r = client.get("/nim", params={"spec": "skeleton(s=3):complete:6"})
    assert r.status_code == 503


def test_session_lifecycle():
    client = make_client()
    body = create_session(client, spec="complete:2")
    session = body["session"]
    sid = session["id"]
    assert body["engine_move"] is None
    assert session["status"] == "ongoing" and session["to_move"] == "human"
    assert session["spec"] == "complete:2"
    assert sorted(map(tuple, session["faces"])) == [(0,), (0, 1), (1,)]
    assert session["live_faces"] == session["faces"]
    assert client.get("/sessions").json()["sessions"] == [sid]

    # taking the edge leaves two isolated vertices: a lost position
    session = post_move(client, sid, (0, 1)).json()["session"]
    assert session["status"] == "ongoing"
    assert [m["by"] for m in session["moves"]] == ["human", "engine"]
    assert replay_live_faces(session) == sorted(map(tuple,
                                                    session["live_faces"]))

    last = [f for f in session["live_faces"]]
    assert len(last) == 1
    session = post_move(client, sid, last[0]).json()["session"]
    assert session["status"] == "engine_lost"
    assert session["to_move"] is None

    r = post_move(client, sid, (0,))
    assert r.status_code == 409 and "game is over" in r.json()["detail"]

    assert client.delete(f"/sessions/{sid}").json() == {"deleted": sid}
    assert client.get(f"/sessions/{sid}").status_code == 404


def test_engine_wins_lost_seat_game():
    # complete:3 is a second-player win; the engine has the B seat
    client = make_client()
    session = create_session(client, spec="complete:3")["session"]
    sid = session["id"]
    while session["status"] == "ongoing":
        session = post_move(client, sid,
                            session["live_faces"][0]).json()["session"]
    assert session["status"] == "human_lost"
    assert all(m["perfect"] for m in session["moves"] if m["by"] == "engine")


def test_engine_moves_first_when_asked():
    client = make_client()
    body = create_session(client, spec="complete:4", human_first=False)
    assert body["engine_move"] is not None
    session = body["session"]
    assert session["moves"][0]["by"] == "engine"
    assert session["to_move"] == "human"
    sid = session["id"]
    while session["status"] == "ongoing":
        session = post_move(client, sid,
                            session["live_faces"][0]).json()["session"]
    # complete:4 is a first-player win and the engine opened
    assert session["status"] == "human_lost"


def test_session_from_complex_body():
    client = make_client()
    body = create_session(
        client,
        complex={"vertices": ["a", "b"], "faces": [[0], [1]]})
    session = body["session"]
    assert session["spec"] is None
    assert session["vertices"] == ["a", "b"]
    assert session["mirror_active"] is False


def test_create_session_validation():
    client = make_client()
    cases = [
        {},
        {"spec": "complete:3", "complex": {"vertices": [], "faces": []}},
        {"spec": "frobnicate:9"},
        {"spec": "complete:3", "engine_policy": "psychic"},
        {"spec": "complete:3", "human_first": "yes"},
        {"complex": {"vertices": [], "faces": []}},
        {"spec": 7},
    ]
    for body in cases:
        r = client.post("/sessions", json=body)
        assert r.status_code == 422, body


def test_move_validation():
    client = make_client()
    sid = create_session(client, spec="complete:3")["session"]["id"]
    for body in [{}, {"face": "0,1"}, {"face": []}, {"face": [True]},
                 {"face": [0, "1"]}]:
        r = client.post(f"/sessions/{sid}/moves", json=body)
        assert r.status_code == 422, body
    assert post_move(client, sid, (7,)).status_code == 422
    assert client.post(f"/sessions/{sid}/moves",
                       content=b"not json").status_code == 422


def test_session_not_found():
    client = make_client()
    assert client.get("/sessions/nope").status_code == 404
    assert client.delete("/sessions/nope").status_code == 404
    assert post_move(client, "nope", (0,)).status_code == 404


def test_mirror_policy_session():
    client = make_client()
    session = create_session(
        client, spec="johnson:6,3",
        engine_policy="mirror-when-available")["session"]
    assert session["mirror_active"] is True
    sid = session["id"]
    body = post_move(client, sid, (0,)).json()
    assert body["engine_move"]["perfect"] is True
    session = body["session"]
    assert session["mirror_active"] is True
    assert replay_live_faces(session) == sorted(map(tuple,
                                                    session["live_faces"]))


def test_snapshot_written_per_finished_game(tmp_path):
    path = tmp_path / "games.jsonl"
    client = make_client(snapshot_path=str(path))
    for _ in range(2):
        session = create_session(client, spec="complete:2")["session"]
        sid = session["id"]
        while session["status"] == "ongoing":
            session = post_move(client, sid,
                                session["live_faces"][0]).json()["session"]
    records = [json.loads(line) for line in path.read_text().splitlines()]
    assert len(records) == 2
    for record in records:
        assert record["spec"] == "complete:2"
        assert record["status"] in ("human_lost", "engine_lost")
        assert len(record["moves"]) >= 2
