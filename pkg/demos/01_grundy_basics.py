"""
Grundy values of small graph chomp positions
============================================

A move picks a surviving vertex or edge and removes it together with
everything containing it; the player left without a move loses.  The
grundy value is 0 exactly at second-player wins.
"""

from graphchomp import Graph, best_move, grundy
from graphchomp.core import Move, apply_move

# a lone vertex is a single forced move: value 1
v = Graph(1, [(0,)])
print("single vertex:", grundy(v.state()))

# an edge adds a second option (take the edge, keep the endpoints)
k2 = Graph.from_edges(2, [(0, 1)])
print("K_2:", grundy(k2.state()))

# the triangle is the smallest second-player win among complete graphs
k3 = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
print("K_3:", grundy(k3.state()))
assert grundy(k3.state()) == 0

# paths P_1..P_8
for n in range(1, 9):
    p = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    print(f"P_{n}: {grundy(p.state())}")

# cycles C_3..C_8
for n in range(3, 9):
    c = Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    print(f"C_{n}: {grundy(c.state())}")

# a full perfect-play game on K_4 (value 1, so the first player wins)
k4 = Graph.from_edges(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
state = k4.state()
print("\nperfect play on K_4 (value", grundy(state), "):")
player = "A"
while not state.is_terminal():
    mv = best_move(state)
    if mv is None:
        # lost position: every move is equally bad, take the first
        mv = Move(state.faces()[0])
    print(f"  {player} takes {mv.face}")
    state = apply_move(state, mv)
    player = "B" if player == "A" else "A"
print("  ", player, "has no move and loses")
assert player == "B"
