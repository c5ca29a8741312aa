"""
Playing against the engine over HTTP
====================================

The play service holds one game per session: POST a move, get the
engine's reply in the same response.  This demo drives the app
in-process; `chomp serve` runs the same app on a real port.
"""

import json
import random

from fastapi.testclient import TestClient

from graphchomp.service import create_app

client = TestClient(create_app())

# what can be played?
families = client.get("/families").json()["families"]
print("available family specs:")
for row in families:
    print(f"  {row['pattern']:<28} {row['description']}")

# ask for a value without starting a game
print("\nGET /nim?spec=kneser:5,2,0 ->",
      json.dumps(client.get("/nim", params={"spec": "kneser:5,2,0"}).json()))

# start a session on the triangle; the engine moves second and the
# position is a second-player win, so the human is doomed
r = client.post("/sessions", json={"spec": "complete:3",
                                   "human_first": True,
                                   "engine_policy": "perfect"})
session = r.json()["session"]
sid = session["id"]
print(f"\nsession {sid} on complete:3, live faces:", session["live_faces"])

rng = random.Random(3)
while session["status"] == "ongoing":
    face = rng.choice(session["live_faces"])
    body = client.post(f"/sessions/{sid}/moves", json={"face": face}).json()
    session = body["session"]
    reply = body["engine_move"]
    print(f"  human takes {face} -> engine takes",
          reply["face"] if reply else "(nothing: game over)")
print("result:", session["status"])
assert session["status"] == "human_lost"

# illegal input is rejected without changing the game
r = client.post(f"/sessions/{sid}/moves", json={"face": [0]})
print("moving after the end ->", r.status_code, r.json()["detail"])
