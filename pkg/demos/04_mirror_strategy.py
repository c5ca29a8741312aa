"""
Involutions and the mirror strategy
===================================

A self-inverse automorphism that maps no vertex to a neighbor reduces
the whole game to its fixed subgraph: answer every move outside the
fixed part with its image, and play perfectly inside.  The mirror
needs no search on the paired part, so it handles graphs far past the
engine's reach.
"""

import random

from graphchomp import families, symmetry
from graphchomp.core import Move, apply_move
from graphchomp.families import JohnsonParams

# J(6,3): complement each 3-subset.  No subset equals its complement,
# so the fixed part is empty and the value is 0: the mirror, playing
# second, always has the answering move.
fam = families.parse_family_spec("johnson:6,3")
g = fam.build()
phi = symmetry.johnson_involution(JohnsonParams(6, 3))
print("J(6,3):", g.vertex_count, "vertices; involution fixes",
      phi.fixed_points())

strat = symmetry.family_mirror_strategy(fam, g)
rng = random.Random(5)
state = g.state()
mv = Move((0,))
rounds = 0
print("\nrandom opponent vs mirror:")
while True:
    reply = strat.reply(state, mv)
    if rounds < 4:
        name = lambda face: [g.vertex_labels[v] for v in face]
        print(f"  opponent {name(mv.face)} -> mirror {name(reply.face)}")
    state = apply_move(apply_move(state, mv), reply)
    rounds += 1
    if state.is_terminal():
        break
    mv = Move(rng.choice(state.faces()))
print(f"opponent ran out of moves after {rounds} rounds")

# validation catches bad candidates and names the broken hypothesis
k2 = families.complete_graph(2)
swapped = symmetry.validate_involution(k2, (1, 0))
print("\nswap on K_2:", [f"{v.hypothesis} at {v.witness}" for v in swapped])

path = families.Graph.from_edges(5, [(i, i + 1) for i in range(4)])
reversal = symmetry.validate_involution(path, (4, 3, 2, 1, 0))
print("reversal of P_5 fixes", reversal.fixed_points())
fixed = symmetry.fixed_subgraph(path, reversal)
print("fixed subgraph:", fixed.vertex_count, "vertex ->",
      "whole game value equals the single-vertex value 1")
