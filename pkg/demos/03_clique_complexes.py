"""
Chomp on clique complexes and their skeletons
=============================================
"""

from graphchomp import engine, families
from graphchomp.closedforms import kneser_skeleton_nim
from graphchomp.core import Move, apply_move
from graphchomp.families import KneserParams

# The clique complex C(G) has every clique of G as a face; a move now
# removes a clique and every clique containing it.  On complete graphs
# the first player wins by taking the whole top face: the remainder is
# the boundary of a simplex, which mirrors itself.
for t in range(1, 6):
    cx = families.clique_skeleton(families.complete_graph(t), t)
    state = cx.state()
    value = engine.grundy(state)
    zero = [f for f in state.faces()
            if engine.grundy(apply_move(state, Move(f))) == 0]
    print(f"C(K_{t}): {cx.face_count:2d} faces, value {value}, "
          f"winning moves: {zero}")
    assert zero == [tuple(range(t))]

# Truncating at dimension s-1 gives the s-skeleton C_s(G).  For s = 2
# that is the graph itself; s = 1 keeps only the vertices.
g = families.complete_graph(4)
for s in range(1, 5):
    cx = families.clique_skeleton(g, s)
    print(f"C_{s}(K_4): {cx.face_count} faces,",
          "value", engine.grundy(cx.state()))

# Kneser skeletons reduce to complete-graph skeletons
p = KneserParams(4, 2, 0)
for s in (1, 2, 3):
    r = kneser_skeleton_nim(p, s)
    cx = families.clique_skeleton(families.kneser_graph(p), s)
    got = engine.grundy(cx.state())
    print(f"C_{s}(KG(4,2,0)): formula {r.nim} ({r.provenance}), engine {got}")
    assert r.nim == got

# the Petersen graph has no triangles, so its clique complex is itself
petersen = families.kneser_graph(KneserParams(5, 2, 0))
c3 = families.clique_skeleton(petersen, 3)
print("C_3(Petersen) faces:", c3.face_count,
      "= vertices + edges:", petersen.vertex_count + len(petersen.edges()))
